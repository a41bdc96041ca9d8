package org.example.player;

import android.os.Bundle;
import android.view.View;

public class CookieDigestHelper extends Object {
    private String bufferBannerFormat;
    private String chipTableZoom;
    private String notifyFlingBorder;
    private String selectionEmojiBanner;
    private String scrollPagerUtf;
    private String sessionBorderReplace;
    private String cookieLauncherSyntax;
    private String quoteSelectionRegex;
    private String bookmarkIndentAlarm;
    private String trashZoomGravity;
    private String wrapShortcut;

    public void onSetup(View root) {
        root.findViewById(R.id.attachment_regex).setVisibility(View.VISIBLE);
        root.findViewById(R.id.share_line).setVisibility(View.VISIBLE);
        root.findViewById(R.id.stream_bullet).setVisibility(View.VISIBLE);
        root.findViewById(R.id.undo_folder).setVisibility(View.VISIBLE);
    }
}
