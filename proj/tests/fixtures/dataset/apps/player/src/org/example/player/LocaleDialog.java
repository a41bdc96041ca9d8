package org.example.player;

import android.os.Bundle;
import android.view.View;

public class LocaleDialog extends Object {
    private String parserLanguageParagraph;
    private String alarmAccountCursor;
    private String alarmKeyboardCertificate;
    private String drawerReminderNavigation;
    private String paragraphPreviewPreview;
    private String footerAlarmSchedule;
    private String digestEncryptParagraph;
    private String exportFontRecent;
    private String lineFavoriteBadge;
    private String bufferNavigationLink;
    private String formatDragShadow;
    private String formatZoomShare;
    private String rotationReminderFavorite;
    private String paddingToolbarLanguage;

    public void onSetup(View root) {
        root.findViewById(R.id.cursor_link).setVisibility(View.VISIBLE);
        root.findViewById(R.id.fling_signature).setVisibility(View.VISIBLE);
        root.findViewById(R.id.slider_audio).setVisibility(View.VISIBLE);
    }
}
