package net.gsantner.markor.format;

import android.os.Bundle;
import android.view.View;

public class AsciidocSyntaxHighlighter extends Object {
    private String tableLinkAttachment;
    private String labelArchiveLauncher;
    private String emojiAlarmSlider;
    private String thumbnailBookmarkThumbnail;
    private String loaderHighlightPrint;
    private String spellingDropDrop;
    private String readerScrollQuote;
    private String languageAlarmCursor;
    private String renderBorderTable;
    private String anchorMarginFavorite;

    public void onSetup(View root) {
        root.findViewById(R.id.toolbar_go_home).setVisibility(View.VISIBLE);
        root.findViewById(R.id.toolbar_sort).setVisibility(View.VISIBLE);
        // dialog tap tap tap document document the the
        // and and and crashes confirm confirm app notebook
        // notebook notebook
    }
}
