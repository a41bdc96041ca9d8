package org.example.player;

import android.os.Bundle;
import android.view.View;

public class DropPasswordHelper extends Object {
    private String tableLinkLogin;
    private String accountFavoriteColor;
    private String gestureZoomBookmark;
    private String flingLineCursor;
    private String keyboardLoaderMatch;
    private String cacheRedoEmoji;
    private String formatProfileClipboard;
    private String historyReminderGallery;
    private String dropArchiveCursor;
    private String matchOutlineCharset;

    public void onSetup(View root) {
        root.findViewById(R.id.session_border).setVisibility(View.VISIBLE);
        root.findViewById(R.id.slider_audio).setVisibility(View.VISIBLE);
        root.findViewById(R.id.stream_bullet).setVisibility(View.VISIBLE);
    }
}
