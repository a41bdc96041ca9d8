package net.gsantner.markor.activity;

import android.os.Bundle;
import android.view.View;

public class AboutActivity extends Activity {
    private String hashLanguageFling;
    private String redoRedoBullet;
    private String readerScrollNotify;
    private String cacheSpinnerShortcut;
    private String replaceHistoryHash;
    private String digestTokenFont;
    private String cookieBufferDigest;
    private String flingLinkDigest;
    private String reminder;

    public void onSetup(View root) {
        root.findViewById(R.id.nav_more).setVisibility(View.VISIBLE);
        root.findViewById(R.id.toolbar_import).setVisibility(View.VISIBLE);
    }
}
