"""
Gränsvy: gradgränser och kostnadsuttryck för valfria (n, grader)
"""

import pandas as pd
import streamlit as st

from errors import AlgebraError
from harness import PROFILES, profile_degrees
from series_bounds import bound_report, complexity_estimate, semiregular_series


def bounds_frame(n, m_values, profile, degree=2):
    """En rad per m med alla gränser, None där förutsättningen inte håller."""
    rows = []
    for m in m_values:
        report = bound_report(n, profile_degrees(profile, n, m, degree))
        rows.append({'m': m, **report.as_dict()})
    return pd.DataFrame(rows)


def show(settings):
    st.header("Gradgränser")

    col1, col2, col3 = st.columns(3)
    with col1:
        n = st.number_input("n (variabler)", min_value=1, max_value=30, value=9)
    with col2:
        low, high = st.slider("m-intervall", 1, 60, (n + 1, 2 * n))
    with col3:
        profile = st.selectbox("Gradprofil", PROFILES)

    try:
        df = bounds_frame(n, range(low, high + 1), profile)
    except AlgebraError as e:
        st.error(str(e))
        return
    st.dataframe(df, hide_index=True)
    st.line_chart(df.set_index('m')[['lazard', 'd_new', 'd_reg_formula']])

    with st.expander("Semireguljär serie"):
        m = st.number_input("m", min_value=1, value=n + 1, key="series_m")
        degrees = profile_degrees(profile, n, m)
        st.code(str(semiregular_series(n, degrees)))

    with st.expander("Kostnadsuttryck"):
        omega = st.text_input("ω (2 ≤ ω ≤ 3)", "2.37")
        D = st.number_input("Lösningsgrad D", min_value=1, value=4)
        try:
            estimate = complexity_estimate(n, high, D, omega)
        except (AlgebraError, ValueError) as e:
            st.error(str(e))
        else:
            st.json({'full': str(estimate.full),
                     'without_zero_reductions': str(estimate.without_zero_reductions),
                     'per_degree': str(estimate.per_degree)})
