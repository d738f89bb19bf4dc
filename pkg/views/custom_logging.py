from collections import deque
from datetime import datetime
import json
import os
import sys

import pandas as pd
import pytz


# Loggningssystem för lösningsgradslabbet
# Detta system hanterar all loggning av beräkningar och verifieringar.
# Varje händelse sparas i en begränsad buffert i minnet (de senaste
# settings.log_buffer_size posterna), skrivs till stderr och kan dessutom
# läggas till i en platt JSONL-fil (settings.log_path).
# stdout används aldrig, där skriver CLI:t sina CSV/JSON-resultat.

###############################
# Actiontyper (alla i lowercase):
# "compute"    - En beräkning har körts (Gröbnerbas, RREF, Hilbertserie)
# "verify"     - En verifiering har körts och gått igenom
# "violation"  - En verifiering har hittat ett brott mot en egenskap
# "skip"       - Ett försök hoppades över (förutsättning uppfylldes inte)
# "warning"    - Indata uppfyller inte en gräns förutsättning
# "export"     - Data har exporterats till fil
# "error"      - Ett undantag fångades (t.ex. i ett enskilt försök)
# "cache"      - Analyscachen eller loggbufferten tömdes
###############################

###############################
# Kategorier (alla i lowercase):
# "field"       - Kroppsaritmetik, polynom, inläsning
# "series"      - Serier och gradgränser
# "groebner"    - Buchberger, mättnad
# "macaulay"    - Macaulaymatriser, sd_mac, sd_mut
# "hilbert"     - Hilbertfunktioner och regularitetsgrader
# "regularity"  - Klassificering och verifieringar
# "survey"      - Slumpmässiga undersökningar
# "cli"         - Kommandoraden
# "export"      - Excel- och CSV-export
# "admin"       - Administrationsvyn
###############################

###############################
# Meddelandeformat och exempel:
# Compute:   "Beräknade [objekt]: [detaljer]"
#            Ex: "Beräknade reducerad Gröbnerbas: 11 element, max grad 4"
#
# Violation: "Brott mot [egenskap]: [detaljer]"
#            Ex: "Brott mot kedjan sd_mut <= sd_mac: 5 > 4"
#
# Skip:      "Hoppade över [vad]: [orsak]"
#            Ex: "Hoppade över försök 12: F^top är inte kryptografiskt semireguljärt"
###############################

LOG_COLUMNS = ['action', 'description', 'category', 'timestamp']

LOG_BUFFER_SIZE = 10_000

_log_entries = deque(maxlen=LOG_BUFFER_SIZE)
_log_path = ""
_timezone = 'Europe/Stockholm'


def configure_logging(settings):
    """
    Kopplar loggningen till en konfiguration.

    Args:
        settings (Settings): Läser log_path, timezone och log_buffer_size
    """
    global _log_entries, _log_path, _timezone
    _log_path = settings.log_path or ""
    _timezone = settings.timezone or 'Europe/Stockholm'
    size = settings.log_buffer_size or LOG_BUFFER_SIZE
    if size != _log_entries.maxlen:
        _log_entries = deque(_log_entries, maxlen=size)


def current_time():
    """
    Genererar en formaterad tidsstämpel i den konfigurerade tidszonen.

    Funktionen:
    1. Använder pytz för att hantera tidszonen (standard Europe/Stockholm)
    2. Hanterar automatiskt sommar- och vintertid

    Returns:
        str: Formaterad tidsstämpel i formatet "Datum: ÅÅÅÅ-MM-DD Tid: HH:MM:SS"
    """
    timezone = pytz.timezone(_timezone)
    local_time = datetime.now(timezone)
    return local_time.strftime("Datum: %Y-%m-%d Tid: %H:%M:%S")


def log_action(action, description, category):
    """
    Loggar en händelse med full felhantering.

    Funktionen:
    1. Bygger en loggpost med tidsstämpel
    2. Sparar den i minnesbufferten
    3. Skriver den till stderr och, om konfigurerat, till loggfilen

    Args:
        action (str): Typ av händelse (se actiontyper i huvudkommentaren)
        description (str): Beskrivning av händelsen
        category (str): Kategori (se kategorier i huvudkommentaren)

    Tekniska detaljer:
    - Kastar aldrig undantag, fel vid filskrivning rapporteras på stderr
    """
    try:
        log_entry = {
            'action': action,
            'description': description,
            'category': category,
            'timestamp': current_time(),
        }
        _log_entries.append(log_entry)
        print(f"[{category}] {action}: {description}", file=sys.stderr)

        if _log_path:
            directory = os.path.dirname(_log_path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(_log_path, "a", encoding="utf-8") as handle:
                handle.write(json.dumps(log_entry, ensure_ascii=False) + "\n")
    except Exception as e:
        print(f"Error saving log entry: {e}", file=sys.stderr)


def load_logs():
    """
    Hämtar alla loggar som en DataFrame.

    Returns:
        pandas.DataFrame: DataFrame med kolumnerna action, description,
        category och timestamp (tom men med rätt schema om inget loggats)
    """
    if not _log_entries:
        return pd.DataFrame(columns=LOG_COLUMNS)
    return pd.DataFrame(list(_log_entries), columns=LOG_COLUMNS)


def get_logs_by_category():
    """
    Grupperar loggarna efter kategori.

    Returns:
        dict: Ordbok där nycklar är kategorier och värden är listor av loggposter
    """
    logs_by_category = {}
    for entry in _log_entries:
        logs_by_category.setdefault(entry['category'], []).append(entry)
    return logs_by_category


def clear_logs():
    """Tömmer minnesbufferten (loggfilen lämnas orörd)."""
    _log_entries.clear()
