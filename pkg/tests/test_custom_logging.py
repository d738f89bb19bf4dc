"""Tester för loggningen."""

import json

import pytest

from settings import DEFAULT_SETTINGS, load_settings
from views.custom_logging import (
    LOG_COLUMNS,
    clear_logs,
    configure_logging,
    current_time,
    get_logs_by_category,
    load_logs,
    log_action,
)


@pytest.fixture(autouse=True)
def fresh_logs():
    clear_logs()
    configure_logging(DEFAULT_SETTINGS)
    yield
    clear_logs()
    configure_logging(DEFAULT_SETTINGS)


def test_current_time_format():
    stamp = current_time()
    assert stamp.startswith("Datum: ")
    assert " Tid: " in stamp


def test_empty_log_frame_has_schema():
    logs = load_logs()
    assert logs.empty
    assert list(logs.columns) == LOG_COLUMNS


def test_log_action_and_grouping(capsys):
    log_action("compute", "Beräknade reducerad Gröbnerbas: 3 element", "groebner")
    log_action("skip", "Hoppade över försök 2: F^top är inte kryptografiskt semireguljärt", "survey")
    log_action("violation", "Brott mot kedjan i försök 4", "survey")

    logs = load_logs()
    assert list(logs["action"]) == ["compute", "skip", "violation"]
    grouped = get_logs_by_category()
    assert len(grouped["survey"]) == 2
    assert grouped["groebner"][0]["description"].startswith("Beräknade")
    assert "[groebner] compute:" in capsys.readouterr().err


def test_clear_logs():
    log_action("compute", "x", "field")
    clear_logs()
    assert load_logs().empty


def test_json_lines_file(tmp_path):
    path = tmp_path / "nested" / "algebra.jsonl"
    configure_logging(load_settings(log_path=str(path)))
    log_action("export", "Skrev resultat", "cli")
    log_action("error", "Försök 1 avbröts", "survey")
    entries = [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]
    assert [e["action"] for e in entries] == ["export", "error"]
    assert entries[1]["description"] == "Försök 1 avbröts"


def test_log_action_never_raises(tmp_path, capsys):
    configure_logging(load_settings(log_path=str(tmp_path)))
    log_action("compute", "katalogen går inte att skriva till", "field")
    assert "Error saving log entry" in capsys.readouterr().err
    assert len(load_logs()) == 1


def test_buffer_keeps_only_the_latest_entries():
    configure_logging(load_settings(log_buffer_size=3))
    for i in range(5):
        log_action("compute", f"Beräknade steg {i}", "groebner")
    logs = load_logs()
    assert list(logs["description"]) == ["Beräknade steg 2", "Beräknade steg 3", "Beräknade steg 4"]
