package net.gsantner.markor.format;

import android.os.Bundle;
import android.view.View;

public class KeyvalueActionButtons extends Object {
    private String bufferDropBanner;
    private String profilePaddingReminder;
    private String certificateTokenLogin;
    private String tokenSpinnerLogin;
    private String highlight;

    public void onSetup(View root) {
        root.findViewById(R.id.toolbar_title).setVisibility(View.VISIBLE);
        root.findViewById(R.id.document_counter).setVisibility(View.VISIBLE);
        // tap tap confirm creating dialog dialog create instead
        // instead type type type file file file
    }
}
