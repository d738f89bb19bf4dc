"""
Cachning av analyser i Streamlit-sessionen

Gröbnerbaser och Hilbertserier tar tid att räkna fram, så vyerna hämtar
analyser härifrån i stället för att räkna om vid varje omritning.

Tekniska detaljer:
- Använder Streamlit's sessionshantering (st.session_state)
- Nyckeln är systemets text och strategi
- force_refresh och refresh_cache tömmer även analysmodulens lru_cache
"""

import streamlit as st

from regularity import analyze_system, classify
from system_io import parse_system


def get_cached_analysis(text, strategy="normal", force_refresh=False):
    """
    Hämtar (system, analys, klassificering) för en systemtext.

    - Använder befintlig cache om den finns
    - Tolkar och analyserar systemet annars
    - Tvingar omräkning om force_refresh är True

    Raises:
        ParseError: om texten inte går att tolka
    """
    if 'cached_analyses' not in st.session_state:
        st.session_state.cached_analyses = {}
    cache = st.session_state.cached_analyses
    key = (text.strip(), strategy)
    if force_refresh:
        analyze_system.cache_clear()
    if force_refresh or key not in cache:
        system = parse_system(text)
        analysis = analyze_system(system, strategy)
        cache[key] = (system, analysis, classify(system, analysis))
    return cache[key]


def refresh_cache():
    """Tömmer all cachad analysdata."""
    if 'cached_analyses' in st.session_state:
        del st.session_state.cached_analyses
    analyze_system.cache_clear()
