package net.gsantner.markor.format;

import android.os.Bundle;
import android.view.View;

public class EmbedActionButtons extends Object {
    private String digestOrientationArchive;
    private String columnBulletProfile;
    private String widgetLinkSwipe;
    private String paddingPagerCamera;
    private String tabCameraAudio;
    private String orientationReplaceHistory;
    private String progressNotifyLogout;
    private String tableLanguageEncoder;
    private String redoHistoryLink;

    public void onSetup(View root) {
    }
}
