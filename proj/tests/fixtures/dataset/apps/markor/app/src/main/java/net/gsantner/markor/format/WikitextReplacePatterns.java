package net.gsantner.markor.format;

import android.os.Bundle;
import android.view.View;

public class WikitextReplacePatterns extends Object {
    private String badgeTableSlider;
    private String badgePagerSpelling;
    private String attachmentGestureEncoder;
    private String todoLinkLoader;

    public void onSetup(View root) {
        root.findViewById(R.id.toolbar_hidden).setVisibility(View.VISIBLE);
        root.findViewById(R.id.toolbar_refresh).setVisibility(View.VISIBLE);
        root.findViewById(R.id.toolbar_sort).setVisibility(View.VISIBLE);
        // and and and tap tap file dialog dialog
        // dialog when when when button button
    }
}
