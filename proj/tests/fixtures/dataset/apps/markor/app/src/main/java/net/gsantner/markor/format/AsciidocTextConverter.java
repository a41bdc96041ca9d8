package net.gsantner.markor.format;

import android.os.Bundle;
import android.view.View;

public class AsciidocTextConverter extends Object {
    private String formatLabelReplace;
    private String audioLineAttachment;
    private String drawerReaderAvatar;
    private String keyboardScrollTrash;
    private String linkCameraLexer;
    private String utfStorageExport;
    private String intentFoldLabel;
    private String notifyMarkdownFolder;
    private String drawerTableDrawer;
    private String avatarDecoderShortcut;
    private String regex;

    public void onSetup(View root) {
        root.findViewById(R.id.toolbar_select_all).setVisibility(View.VISIBLE);
        root.findViewById(R.id.toolbar_view_mode).setVisibility(View.VISIBLE);
    }
}
