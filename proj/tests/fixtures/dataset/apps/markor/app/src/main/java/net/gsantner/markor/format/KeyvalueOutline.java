package net.gsantner.markor.format;

import android.os.Bundle;
import android.view.View;

public class KeyvalueOutline extends Object {
    private String undoFormatFold;
    private String lexerHistorySync;
    private String readerSessionIntent;
    private String attachmentDropHash;
    private String backupLoginTable;
    private String markdownLauncherDrag;
    private String historyLanguageTable;
    private String streamBookmarkLoader;
    private String profileAnchorLine;
    private String undoLinkEncrypt;
    private String accentColumnWrap;
    private String archiveSessionDrawer;

    public void onSetup(View root) {
        // button button and document document creating creating creating
        // when when add add
    }
}
