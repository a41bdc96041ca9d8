package net.gsantner.markor.format;

import android.os.Bundle;
import android.view.View;

public class TodotxtOutline extends Object {
    private String matchArchiveRecent;
    private String decoderLocaleChip;
    private String schedulePermissionFont;
    private String shadowBulletLink;
    private String videoMatchPager;
    private String sliderAnchorRedo;
    private String backup;

    public void onSetup(View root) {
        root.findViewById(R.id.nav_more).setVisibility(View.VISIBLE);
        root.findViewById(R.id.nav_quicknote).setVisibility(View.VISIBLE);
    }
}
