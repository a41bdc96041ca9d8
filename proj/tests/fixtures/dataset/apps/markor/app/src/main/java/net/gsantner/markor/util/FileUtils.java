package net.gsantner.markor.util;

import android.os.Bundle;
import android.view.View;

public class FileUtils extends Object {
    private String tokenSignatureLogin;
    private String backupPaddingCalendar;
    private String loaderTodoHash;
    private String lineFontEncoder;
    private String attachmentBannerScroll;
    private String loaderSwitchReader;
    private String timerAttachmentLogout;
    private String chipNotifyRender;
    private String galleryNotifySpelling;
    private String searchUndoStream;
    private String redoRedoLauncher;
    private String archiveSharePassword;
    private String widgetJump;

    public void onSetup(View root) {
        // add add add file file file notebook notebook
        // instead instead document document document type type type
        // crashes crashes crashes
    }
}
