"""
Statistikmodul för lösningsgradslabbet

1. Gränstabeller
   - Lazard, gradsummegränsen, D_new, D och 2D−1 per profil och n
   - Nedladdning som CSV

2. Slumpundersökning
   - Kör survey_results med valda parametrar
   - Visar andelar CSR, generaliserat CSR och svagt omvänd lexikografisk per m
   - Visar antal brott per kategori och den gemensamma fördelningen

Tekniska detaljer:
- Resultatet sparas i st.session_state['survey_result'] så att exporten kan använda det
- Hanterar databearbetning med pandas, diagram via Streamlit's inbyggda diagram
"""

import pandas as pd
import streamlit as st

from errors import AlgebraError
from harness import PROFILES, SurveyConfig, reproduce_tables, survey_results, table_frame
from views.export_data import survey_frames

RATE_COLUMNS = ['csr_rate', 'gcsr_rate', 'wrl_rate']
VIOLATION_COLUMNS = ['hilbert_violations', 'lm_violations', 'bound_violations',
                     'chain_violations', 'dehom_violations', 'telemetry_violations']


def show_tables():
    """Visar gränstabellerna, en expander per profil och n."""
    df = table_frame()
    for (profile, n), group in df.groupby(['profile', 'n'], sort=False):
        with st.expander(f"📈 {profile}, n = {n}"):
            st.dataframe(group.drop(columns=['profile', 'n']), hide_index=True)
    st.download_button(
        label="📥 Ladda ner CSV",
        data=reproduce_tables(),
        file_name="granser.csv",
        mime="text/csv",
    )


def show_survey(survey):
    """Visar ett undersökningsresultat."""
    cells_df, trials_df = survey_frames(survey)
    totals = survey['totals']

    col1, col2, col3, col4 = st.columns(4)
    col1.metric("Försök", totals['trials'])
    col2.metric("Genomförda", totals['completed'])
    col3.metric("Överhoppade", totals['skipped'])
    col4.metric("Fel", totals['errors'])

    st.markdown("### Andelar per m")
    st.bar_chart(cells_df.set_index('m')[RATE_COLUMNS])

    st.markdown("### Brott")
    violations = pd.DataFrame([{'Kategori': key, 'Antal': totals[key]} for key in VIOLATION_COLUMNS])
    st.dataframe(violations, hide_index=True)
    if totals['telemetry_violations']:
        st.info("Telemetribrott rapporteras men räknas inte som fel.")

    with st.expander("Per m"):
        st.dataframe(cells_df, hide_index=True)
    with st.expander("Alla försök"):
        st.dataframe(trials_df, hide_index=True)


def show(settings):
    """Visar gränstabeller och slumpundersökningar."""
    st.header("Statistik")
    tab1, tab2 = st.tabs(["Gränstabeller", "Slumpundersökning"])

    with tab1:
        show_tables()

    with tab2:
        with st.form("survey"):
            col1, col2, col3 = st.columns(3)
            with col1:
                n = st.number_input("n", min_value=1, max_value=8, value=3)
                profile = st.selectbox("Gradprofil", PROFILES)
            with col2:
                low = st.number_input("m från", min_value=1, value=n + 1)
                high = st.number_input("m till", min_value=1, value=n + 2)
            with col3:
                trials = st.number_input("Försök per m", min_value=1, value=settings.survey_trials)
                seed = st.number_input("Frö", min_value=0, value=0)
            submitted = st.form_submit_button("▶ Kör undersökning")

        if submitted:
            cfg = SurveyConfig(n=int(n), m_range=(int(low), int(high)), profile=profile,
                               q=settings.survey_modulus, trials=int(trials), seed=int(seed),
                               workers=settings.survey_workers)
            try:
                with st.spinner("Kör försök..."):
                    st.session_state.survey_result = survey_results(cfg)
            except AlgebraError as e:
                st.error(str(e))

        survey = st.session_state.get('survey_result')
        if survey is not None:
            show_survey(survey)
