"""
Konfiguration för lösningsgradslabbet

Inställningarna läses från Streamlit's secrets (sektionen [algebra] i
.streamlit/secrets.toml), på samma sätt som anslutningsinställningar läses i
en Streamlit-app. Finns ingen secrets-fil används standardvärdena nedan.

Exempel på .streamlit/secrets.toml:

    [algebra]
    survey_modulus = 31
    reference_modulus = 73
    syzygy_entry_cap = 500000
    log_path = "logs/algebra.jsonl"
    log_buffer_size = 10000

Tekniska detaljer:
- Settings är en fryst dataclass och kan skickas till arbetsprocesser
- Okända nycklar i secrets-sektionen ignoreras
- CLI-flaggor skriver över värdena för ett enskilt anrop
"""

from dataclasses import dataclass, fields, replace

import streamlit as st


@dataclass(frozen=True)
class Settings:
    survey_modulus: int = 31
    reference_modulus: int = 73
    syzygy_entry_cap: int = 500_000
    survey_trials: int = 50
    survey_workers: int = 1
    saturation_step_cap: int = 64
    log_path: str = ""
    log_buffer_size: int = 10_000
    timezone: str = "Europe/Stockholm"


DEFAULT_SETTINGS = Settings()


def load_settings(**overrides):
    """
    Läser inställningar från st.secrets och lägger på eventuella överskrivningar.

    Args:
        **overrides: Fältvärden som ska ersätta det som lästs in (None ignoreras)

    Returns:
        Settings: Färdig konfiguration
    """
    known = {f.name for f in fields(Settings)}
    values = {}
    try:
        section = st.secrets["algebra"]
        values = {key: section[key] for key in section if key in known}
    except Exception:
        # Ingen secrets-fil eller ingen [algebra]-sektion
        values = {}

    settings = replace(DEFAULT_SETTINGS, **values)
    cleaned = {key: value for key, value in overrides.items() if value is not None and key in known}
    return replace(settings, **cleaned)
