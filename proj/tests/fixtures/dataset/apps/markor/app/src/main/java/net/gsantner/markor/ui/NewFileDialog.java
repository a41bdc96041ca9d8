package net.gsantner.markor.ui;

import android.os.Bundle;
import android.view.View;

public class NewFileDialog extends Object {
    private String templateExtensionEncrypt;
    private String folderNameTitle;
    private String fileDialogDocument;
    private String create;

    public void onSetup(View root) {
        root.findViewById(R.id.new_file_dialog__name).setVisibility(View.VISIBLE);
        root.findViewById(R.id.new_file_dialog__ext).setVisibility(View.VISIBLE);
        root.findViewById(R.id.new_file_dialog__type).setVisibility(View.VISIBLE);
        root.findViewById(R.id.new_file_dialog__template).setVisibility(View.VISIBLE);
        root.findViewById(R.id.new_file_dialog__encrypt).setVisibility(View.VISIBLE);
        root.findViewById(R.id.new_file_dialog__ok).setVisibility(View.VISIBLE);
        root.findViewById(R.id.new_file_dialog__cancel).setVisibility(View.VISIBLE);
        root.findViewById(R.id.new_file_dialog__folder).setVisibility(View.VISIBLE);
        root.findViewById(R.id.new_file_dialog__utf_bom).setVisibility(View.VISIBLE);
        root.findViewById(R.id.new_file_dialog__open_after).setVisibility(View.VISIBLE);
    }
}
