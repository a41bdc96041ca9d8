package net.gsantner.markor.format;

import android.os.Bundle;
import android.view.View;

public class TodotxtTextConverter extends Object {
    private String charsetIndentCalendar;
    private String printNavigationPassword;
    private String bookmarkHeaderAlarm;
    private String shortcutTodoRedo;
    private String parserCertificatePassword;
    private String flingPermissionStorage;
    private String notifyCertificateMatch;
    private String toolbarPasteNavigation;

    public void onSetup(View root) {
        root.findViewById(R.id.toolbar_folder_up).setVisibility(View.VISIBLE);
        // type instead app app app notebook notebook the
        // when tap
    }
}
