"""
Översiktsmodul för lösningsgradslabbet

1. Referensexemplet över F_73
   - Kör alla kontroller och visar PASS/FAIL per kontroll
   - Visar förväntade och beräknade baser

2. Analys av ett eget system
   - Systemet skrivs in i textformatet (rubrikrad "ring q=... vars=...")
   - Visar klassificering, D, D′ och verifieringarna

Tekniska detaljer:
- Analyser hämtas via cache_manager så att omritningar inte räknar om
- Tolkningsfel visas med radnummer
"""

import pandas as pd
import streamlit as st

from errors import AlgebraError
from harness import EXPECTED_BASIS, EXPECTED_HOM_BASIS, EXPECTED_TOP_BASIS, REFERENCE_SYSTEM, reference_example
from regularity import verify_homogenized_hilbert, verify_lm_correspondence
from views.cache_manager import get_cached_analysis


def _verdict_frame(verdict):
    return pd.DataFrame([{'Kontroll': name, 'Resultat': 'PASS' if ok else 'FAIL'}
                         for name, ok in verdict.checks.items()])


def show(settings):
    """Visar referensexemplet och analysen av ett eget system."""
    st.header("Översikt")
    tab1, tab2 = st.tabs(["Referensexempel", "Analysera system"])

    with tab1:
        st.subheader(f"Referensexemplet över F_{settings.reference_modulus}")
        st.code(REFERENCE_SYSTEM)
        if st.button("▶ Kör referensexemplet"):
            st.session_state.reference_verdict = reference_example()
        verdict = st.session_state.get('reference_verdict')
        if verdict is not None:
            if verdict.passed:
                st.success("PASS: alla kontroller gick igenom")
            else:
                st.error("FAIL: se detaljerna nedan")
            st.dataframe(_verdict_frame(verdict), hide_index=True)
            with st.expander("Detaljer"):
                for line in verdict.details:
                    st.markdown(f"- {line}")
        with st.expander("Förväntade baser"):
            st.markdown("**G:** " + ", ".join(EXPECTED_BASIS))
            st.markdown("**G_top:**")
            st.code("\n".join(EXPECTED_TOP_BASIS))
            st.markdown("**G_hom:**")
            st.code("\n".join(EXPECTED_HOM_BASIS))

    with tab2:
        st.subheader("Analysera ett eget system")
        text = st.text_area("System", REFERENCE_SYSTEM, height=200)
        strategy = st.selectbox("Strategi", ["normal", "sugar"])
        if not st.button("🔍 Analysera"):
            return
        try:
            system, analysis, report = get_cached_analysis(text, strategy)
        except AlgebraError as e:
            st.error(str(e))
            return

        col1, col2, col3 = st.columns(3)
        with col1:
            st.metric("D", str(report.as_dict()["D"]))
            st.metric("CSR", "Ja" if report.is_crypto_semiregular else "Nej")
        with col2:
            st.metric("D′", str(report.as_dict()["D_prime"]))
            st.metric("Generaliserat CSR", "Ja" if report.is_generalized_csr else "Nej")
        with col3:
            st.metric("max.GB.deg", analysis.trace.max_gb_degree)
            st.metric("Svagt omvänt lexikografisk", "Ja" if report.wrl_hom else "Nej")

        with st.expander("Reducerad Gröbnerbas"):
            st.code("\n".join(str(g) for g in analysis.trace.reduced_basis))

        for verdict in (verify_homogenized_hilbert(system, analysis), verify_lm_correspondence(system, analysis)):
            st.markdown(f"**{verdict.name}**: {verdict.status.upper()}")
            if verdict.checks:
                st.dataframe(_verdict_frame(verdict), hide_index=True)
