package net.gsantner.markor.format;

import android.os.Bundle;
import android.view.View;

public class WikitextOutline extends Object {
    private String headingRecentTable;
    private String bannerTabWrap;
    private String syncBannerBanner;
    private String paragraphCalendarEmoji;
    private String calendarProfileGallery;
    private String todoTrashImage;
    private String bufferBackupPassword;
    private String writerIntentPrint;
    private String launcherNotifyGesture;

    public void onSetup(View root) {
        root.findViewById(R.id.toolbar_refresh).setVisibility(View.VISIBLE);
        root.findViewById(R.id.toolbar_sort).setVisibility(View.VISIBLE);
    }
}
