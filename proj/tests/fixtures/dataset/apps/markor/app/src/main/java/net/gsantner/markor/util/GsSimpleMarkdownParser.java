package net.gsantner.markor.util;

import android.os.Bundle;
import android.view.View;

public class GsSimpleMarkdownParser extends Object {
    private String logoutGravityIntent;
    private String headerCameraBackup;
    private String sessionRegexPassword;
    private String readerPaletteColumn;
    private String paletteZoomAudio;
    private String audioReaderExport;
    private String printSwitchFooter;
    private String pasteWidgetTimer;
    private String tabRecentProfile;
    private String archiveToolbarReplace;
    private String markdownPaddingVideo;
    private String bookmarkIndentShortcut;
    private String shareSessionFooter;

    public void onSetup(View root) {
    }
}
