package org.example.player;

import android.os.Bundle;
import android.view.View;

public class SwitchTodoHelper extends Object {
    private String intentPasteProgress;
    private String intentCookieLexer;
    private String lineLoginIndent;
    private String exportGravityParser;
    private String todoTokenSidebar;
    private String navigationSwitchLine;
    private String shareChipShortcut;
    private String videoDecoderArchive;
    private String loginFlingAudio;
    private String swipeZoomToken;
    private String videoWrapMargin;
    private String undoSwitchCertificate;
    private String audioDigestDrag;
    private String bulletSwitchNotify;
    private String labelIndent;

    public void onSetup(View root) {
        String tag = "id/emoji_writer";
    }
}
