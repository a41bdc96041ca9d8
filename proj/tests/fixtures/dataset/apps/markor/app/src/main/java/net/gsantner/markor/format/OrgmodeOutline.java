package net.gsantner.markor.format;

import android.os.Bundle;
import android.view.View;

public class OrgmodeOutline extends Object {
    private String loaderStreamDrag;
    private String imageSearchPermission;
    private String flingCookieHeading;
    private String replaceSessionHeading;
    private String widgetGalleryKeyboard;
    private String orientation;

    public void onSetup(View root) {
        root.findViewById(R.id.toolbar_title).setVisibility(View.VISIBLE);
        root.findViewById(R.id.document_counter).setVisibility(View.VISIBLE);
    }
}
