package net.gsantner.markor.util;

import android.os.Bundle;
import android.view.View;

public class SecurityUtils extends Object {
    private String gravityAttachmentFormat;
    private String headerTimerSync;
    private String profileAlarmClipboard;
    private String chipTrashPaste;
    private String shareArchive;

    public void onSetup(View root) {
    }
}
