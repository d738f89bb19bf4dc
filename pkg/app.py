"""
Lösningsgradslabbet - webbgränssnitt

Detta är Streamlit-appen för att undersöka lösningsgrader för polynomsystem
över primkroppar.

1. Översikt
   - Referensexemplet över F_73 med alla kontroller
   - Analys av ett eget system

2. Gradgränser
   - Lazard, gradsummegränsen, D_new och D för valfria parametrar

3. Gröbnerlabb
   - Buchberger med normal- eller sockerstrategi, sd_mac och sd_mut

4. Statistik
   - Gränstabellerna och slumpundersökningar

5. Export och administration
   - Excel-export, loggvisning och cachehantering

Tekniska detaljer:
- Konfigurationen läses från st.secrets via settings.load_settings
- Analyser cachas i sessionen via views.cache_manager
- Starta med: streamlit run app.py
"""

import streamlit as st

from settings import load_settings
from views import admin, bounds, export_data, groebner_lab, overview, statistics
from views.cache_manager import refresh_cache
from views.custom_logging import configure_logging, current_time

st.set_page_config(
    page_title="Lösningsgradslabbet",
    page_icon="📐",
    layout="wide"
)


def main():
    """
    Huvudfunktion som bygger upp gränssnittet.

    Funktionen:
    1. Läser konfigurationen och kopplar loggningen
    2. Ritar sidofältet med guide och cacheknapp
    3. Visar huvudflikarna
    """
    settings = load_settings()
    configure_logging(settings)

    st.title("📐 Lösningsgradslabbet")

    with st.sidebar:
        st.caption(current_time())
        if st.button("↻ Räkna om", help="Töm cachade analyser"):
            refresh_cache()
            st.rerun()

    with st.sidebar.expander("📋 Kort guide"):
        st.info("""
        #### 1️⃣ Systemformat
        Första raden: `ring q=73 vars=x1,x2,x3`
        Därefter ett polynom per rad, `#` inleder kommentarer.""")

        st.info("""
        #### 2️⃣ Flikar
        - Kör referensexemplet under '📊 Översikt'
        - Jämför gränser under '📏 Gradgränser'
        - Räkna Gröbnerbaser under '🧮 Gröbnerlabb'
        - Kör slumpundersökningar under '📈 Statistik'""")

    st.sidebar.warning("""
    #### ❗ Viktigt att tänka på
    - Beräkningarna är exakta och kan ta tid för n > 6
    - Slumpundersökningar med många försök bör köras från kommandoraden
    """)

    tab_titles = [
        "📊 Översikt",
        "📏 Gradgränser",
        "🧮 Gröbnerlabb",
        "📈 Statistik",
        "📥 Exportera Data",
        "🔧 Administration",
    ]
    tabs = st.tabs(tab_titles)

    with tabs[0]:
        overview.show(settings)
    with tabs[1]:
        bounds.show(settings)
    with tabs[2]:
        groebner_lab.show(settings)
    with tabs[3]:
        statistics.show(settings)
    with tabs[4]:
        export_data.show(settings)
    with tabs[5]:
        admin.show(settings)


if __name__ == "__main__":
    main()
