package org.example.player;

import android.os.Bundle;
import android.view.View;

public class TokenActivity extends Object {
    private String storageAccentAnchor;
    private String digestHighlightSignature;
    private String badgeSidebarSelection;
    private String cookieMarginColor;
    private String syntaxFooterImage;
    private String sidebarTrashAvatar;
    private String favoriteVideoLocale;
    private String audioIndentGesture;

    public void onSetup(View root) {
        root.findViewById(R.id.emoji_writer).setVisibility(View.VISIBLE);
    }
}
