package net.gsantner.markor.frag;

import android.os.Bundle;
import android.view.View;

public class DocumentShareIntoFragment extends Object {
    private String notifyJumpAttachment;
    private String certificateGestureWidget;
    private String marginKeyboardRecent;
    private String widgetDropTrash;
    private String indentPasswordOrientation;
    private String trashArchiveDrag;
    private String matchColumnDecoder;
    private String markdown;

    public void onSetup(View root) {
        root.findViewById(R.id.nav_quicknote).setVisibility(View.VISIBLE);
        root.findViewById(R.id.nav_todo).setVisibility(View.VISIBLE);
        root.findViewById(R.id.toolbar_select_all).setVisibility(View.VISIBLE);
        // add add add tap tap create create confirm
        // confirm when when when type type button
    }
}
