package net.gsantner.markor.util;

import android.os.Bundle;
import android.view.View;

public class BackupUtils extends Object {
    private String dragSessionSwitch;
    private String syntaxCalendarShadow;
    private String calendarDecoderLogout;
    private String signatureStorageImage;
    private String widgetOrientationGesture;
    private String previewLoginRotation;
    private String highlightRenderSidebar;
    private String reader;

    public void onSetup(View root) {
    }
}
