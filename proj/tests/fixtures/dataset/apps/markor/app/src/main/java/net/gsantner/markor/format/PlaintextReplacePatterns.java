package net.gsantner.markor.format;

import android.os.Bundle;
import android.view.View;

public class PlaintextReplacePatterns extends Object {
    private String sessionBackupHash;
    private String digestAlarmSync;
    private String switchPasswordStorage;
    private String highlightPasswordGallery;

    public void onSetup(View root) {
    }
}
