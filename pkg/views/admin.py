"""
Administrationsmodul för lösningsgradslabbet

Modulen tillhandahåller:
- Cachehantering (töm analyscachen)
- Loggvisning med filter per händelsetyp
- Export av loggar till Excel, en flik per händelsetyp
"""

from datetime import datetime
from io import BytesIO

import pandas as pd
import streamlit as st

from views.cache_manager import refresh_cache
from views.custom_logging import clear_logs, get_logs_by_category, load_logs, log_action

ACTION_TYPES = ["compute", "verify", "violation", "skip", "warning", "error", "export", "cache"]


def logs_to_excel(logs):
    """
    Skriver loggarna till en Excel-fil med en flik per händelsetyp.

    Args:
        logs (DataFrame): Loggar från load_logs

    Returns:
        bytes: Excel-filen, eller None om det inte finns några loggar
    """
    if logs.empty:
        return None
    output = BytesIO()
    with pd.ExcelWriter(output, engine='openpyxl') as writer:
        for action_type, group in logs.groupby('action', sort=True):
            df = pd.DataFrame({
                'Tidstämpel': group['timestamp'],
                'Typ': group['action'].str.upper(),
                'Beskrivning': group['description'],
                'Kategori': group['category'],
            })
            df.to_excel(writer, sheet_name=str(action_type).capitalize()[:31], index=False)
    output.seek(0)
    return output.getvalue()


def show(settings):
    """
    Visar administrativa funktioner i två flikar.

    Args:
        settings (Settings): Aktuell konfiguration
    """
    st.header("Administration")
    tab1, tab2 = st.tabs(["Konfiguration", "Systemlogg"])

    with tab1:
        st.subheader("Konfiguration")
        st.json({
            'survey_modulus': settings.survey_modulus,
            'reference_modulus': settings.reference_modulus,
            'syzygy_entry_cap': settings.syzygy_entry_cap,
            'survey_trials': settings.survey_trials,
            'survey_workers': settings.survey_workers,
            'saturation_step_cap': settings.saturation_step_cap,
            'log_path': settings.log_path or "(ingen fil)",
            'log_buffer_size': settings.log_buffer_size,
        })

        col1, col2 = st.columns(2)
        with col1:
            st.metric("Loggkategorier", len(get_logs_by_category()))
        with col2:
            if st.button("↻ Töm analyscachen"):
                refresh_cache()
                log_action("cache", "Analyscachen tömd", "admin")
                st.success("Cachen är tömd!")

    with tab2:
        st.subheader("Systemlogg")
        logs = load_logs()

        col1, col2, col3 = st.columns([1, 1, 4])
        with col1:
            excel = logs_to_excel(logs)
            if excel is not None:
                current_timestamp = datetime.now().strftime('%Y-%m-%d_%H-%M-%S')
                st.download_button(
                    label="📥 Exportera loggar",
                    data=excel,
                    file_name=f"systemloggar_{current_timestamp}.xlsx",
                    mime="application/vnd.openxmlformats-officedocument.spreadsheetml.sheet",
                    help="Ladda ner loggarna som en Excel-fil med en flik per händelsetyp"
                )

        with col2:
            if st.button("🗑️ Rensa loggar", type="secondary", help="Töm loggbufferten"):
                if st.session_state.get('confirm_delete_logs', False):
                    clear_logs()
                    log_action("cache", "Systemloggar rensade", "admin")
                    st.session_state.confirm_delete_logs = False
                    st.rerun()
                else:
                    st.session_state.confirm_delete_logs = True
                    st.warning("Klicka igen för att bekräfta rensning av alla loggar")

        log_filter = st.multiselect(
            "Filtrera efter händelsetyp",
            options=ACTION_TYPES,
            default=ACTION_TYPES,
            help="Välj vilka typer av händelser som ska visas i loggen"
        )

        filtered = logs[logs['action'].isin(log_filter)]
        if filtered.empty:
            st.info("Inga loggar att visa med valda filter.")
        else:
            for _, log in filtered.iloc[::-1].head(200).iterrows():
                st.markdown(
                    f"**{log['timestamp']}** - "
                    f"_{str(log['action']).upper()}_ - "
                    f"{log['category']} - "
                    f"{log['description']}"
                )
