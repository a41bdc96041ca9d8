package net.gsantner.markor.format;

import android.os.Bundle;
import android.view.View;

public class KeyvalueLinkResolver extends Object {
    private String cursorUndoBanner;
    private String permissionGesturePager;
    private String spinnerSpinnerLogout;
    private String localeRotationFling;
    private String pagerFavoriteIntent;
    private String tokenFolderAccount;
    private String permissionRecentFold;
    private String imageSelectionLine;
    private String cacheOutlineThumbnail;
    private String fontRecent;

    public void onSetup(View root) {
        root.findViewById(R.id.toolbar_title).setVisibility(View.VISIBLE);
        root.findViewById(R.id.document_counter).setVisibility(View.VISIBLE);
        // button button crashes crashes tap tap dialog dialog
        // confirm confirm confirm creating creating add add
    }
}
