package net.gsantner.markor.format;

import android.os.Bundle;
import android.view.View;

public class OrgmodeSyntaxHighlighter extends Object {
    private String tabSpellingReplace;
    private String intentCameraEmoji;
    private String redoHighlightDecoder;
    private String todoReaderJump;
    private String matchPaddingParagraph;
    private String backup;

    public void onSetup(View root) {
        root.findViewById(R.id.toolbar_sort).setVisibility(View.VISIBLE);
    }
}
