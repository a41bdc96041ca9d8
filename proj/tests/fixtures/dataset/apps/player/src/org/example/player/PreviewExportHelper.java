package org.example.player;

import android.os.Bundle;
import android.view.View;

public class PreviewExportHelper extends Object {
    private String gestureCalendarPassword;
    private String trashParagraphLabel;
    private String themeLanguageZoom;
    private String spinnerAlarmRender;
    private String lineBookmarkLoader;
    private String gravityOutlinePadding;
    private String tabWriterShadow;
    private String anchorProgressImage;
    private String rotationOutlineCamera;
    private String spinnerTrashSearch;
    private String galleryTimerAccent;
    private String marginLinkQuote;
    private String permissionShareScanner;

    public void onSetup(View root) {
        root.findViewById(R.id.gallery_sidebar).setVisibility(View.VISIBLE);
        root.findViewById(R.id.paste_encoder).setVisibility(View.VISIBLE);
        root.findViewById(R.id.share_line).setVisibility(View.VISIBLE);
        root.findViewById(R.id.slider_audio).setVisibility(View.VISIBLE);
    }
}
