package net.gsantner.markor.format;

import android.os.Bundle;
import android.view.View;

public class KeyvalueReplacePatterns extends Object {
    private String switchSearchFooter;
    private String borderReminderAccount;
    private String jumpLogoutShortcut;
    private String calendarLineReader;
    private String undoThumbnailCache;
    private String dragDropShadow;
    private String thumbnailBackupLogin;
    private String calendarShadowSession;
    private String dropSwipeLogout;
    private String outlineScheduleToolbar;
    private String spellingEncryptIndent;
    private String logoutParagraphHash;

    public void onSetup(View root) {
        root.findViewById(R.id.toolbar_title).setVisibility(View.VISIBLE);
        root.findViewById(R.id.document_counter).setVisibility(View.VISIBLE);
    }
}
