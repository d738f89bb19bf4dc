"""
Gröbnerlabb

Modulen låter användaren:
- Beräkna en reducerad Gröbnerbas med vald strategi och ordning
- Jämföra max.GB.deg, stegrad och strikt grad
- Köra sd_mac och sd_mut upp till en vald grad
- Se Hilbertdata för ledmonomidealet

Tekniska detaljer:
- Systemet skrivs in i samma textformat som kommandoraden läser
- Alla fel från algebramodulerna visas som felmeddelanden, aldrig som stackspår
"""

import pandas as pd
import streamlit as st

from errors import AlgebraError
from groebner import buchberger
from harness import REFERENCE_SYSTEM
from hilbert import lm_ideal, regularity_degrees
from macaulay import sd_mac, sd_mut
from system_io import parse_system


def show(settings):
    """Visar Gröbnerlabbet."""
    st.header("Gröbnerlabb")

    text = st.text_area("System", REFERENCE_SYSTEM, height=200, key="lab_system")
    col1, col2, col3 = st.columns(3)
    with col1:
        strategy = st.selectbox("Strategi", ["normal", "sugar"], key="lab_strategy")
    with col2:
        tie_break = st.selectbox("Lika nycklar", ["oldest", "newest"])
    with col3:
        homogenize = st.checkbox("Homogenisera (h-DRL)")
    d_max = st.number_input("d_max för sd_mac och sd_mut", min_value=1, value=8)

    if not st.button("▶ Beräkna"):
        return

    try:
        system = parse_system(text)
        if homogenize:
            system = system.homogenize()
        trace = buchberger(system, strategy, tie_break)
    except AlgebraError as e:
        st.error(str(e))
        return

    st.subheader("Reducerad Gröbnerbas")
    st.code("\n".join(str(g) for g in trace.reduced_basis))

    telemetry = trace.telemetry()
    col1, col2, col3, col4 = st.columns(4)
    col1.metric("max.GB.deg", telemetry["max_gb_degree"])
    col2.metric("Stegrad", telemetry["sd_step"])
    col3.metric("Strikt grad", telemetry["sd_strict"])
    col4.metric("Nollreduktioner", telemetry["zero_reductions"])

    with st.expander("Grad per steg"):
        st.line_chart(pd.DataFrame({'grad': telemetry["step_degrees"]}))

    summary = regularity_degrees(lm_ideal(trace.reduced_basis))
    with st.expander("Hilbertdata"):
        st.json(summary.as_dict())

    st.subheader("Lösningsgrader")
    try:
        mac = sd_mac(system, d_max, trace.reduced_basis)
        mut = sd_mut(system, d_max, trace.reduced_basis)
    except AlgebraError as e:
        st.error(str(e))
        return
    st.dataframe(pd.DataFrame([
        {'Metod': 'sd_mac', 'Grad': str(mac.degree) if not mac.exceeded else f"> {d_max}"},
        {'Metod': 'sd_mut', 'Grad': str(mut.degree) if not mut.exceeded else f"> {d_max}"},
    ]), hide_index=True)
