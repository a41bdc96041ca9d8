package net.gsantner.markor.util;

import android.os.Bundle;
import android.view.View;

public class NetworkUtils extends Object {
    private String localeLexerLine;
    private String hashCacheIntent;
    private String charsetBackupTrash;
    private String switchStreamQuote;
    private String thumbnailStreamMatch;
    private String signatureWidgetTab;
    private String bulletScannerJump;
    private String badgeDecoderOutline;
    private String shareScannerSession;
    private String localeHeaderColumn;
    private String profileMarginWidget;
    private String avatar;

    public void onSetup(View root) {
        // the the the title file file and creating
        // creating
    }
}
