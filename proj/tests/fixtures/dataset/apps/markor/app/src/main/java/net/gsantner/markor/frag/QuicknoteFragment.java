package net.gsantner.markor.frag;

import android.os.Bundle;
import android.view.View;

public class QuicknoteFragment extends Object {
    private String lineDigestParser;
    private String regexTableParser;
    private String cacheFlingRecent;
    private String todoLabelClipboard;
    private String videoCharsetSpelling;
    private String imagePasteParser;
    private String anchorEncryptHeading;
    private String replaceLoginZoom;
    private String tableVideoCertificate;
    private String footerPreviewScroll;
    private String decoderStreamFooter;

    public void onSetup(View root) {
        root.findViewById(R.id.nav_quicknote).setVisibility(View.VISIBLE);
        root.findViewById(R.id.toolbar_folder_up).setVisibility(View.VISIBLE);
        root.findViewById(R.id.toolbar_sort).setVisibility(View.VISIBLE);
    }
}
