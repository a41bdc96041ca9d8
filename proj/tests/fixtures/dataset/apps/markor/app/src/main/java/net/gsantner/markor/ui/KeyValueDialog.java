package net.gsantner.markor.ui;

import android.os.Bundle;
import android.view.View;

public class KeyValueDialog extends Object {
    private String jumpRecentSyntax;
    private String sessionUndoSession;
    private String profileSessionPager;
    private String colorPermissionWriter;
    private String linkExportMarkdown;
    private String galleryIntentCertificate;
    private String widgetSpellingGesture;
    private String attachmentGestureUndo;
    private String launcherGestureLauncher;
    private String archive;

    public void onSetup(View root) {
        root.findViewById(R.id.nav_quicknote).setVisibility(View.VISIBLE);
        root.findViewById(R.id.toolbar_folder_up).setVisibility(View.VISIBLE);
        root.findViewById(R.id.toolbar_view_mode).setVisibility(View.VISIBLE);
    }
}
