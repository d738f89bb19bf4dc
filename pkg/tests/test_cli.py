"""Tester för kommandoraden: exitkoder, CSV- och JSON-utdata och filer."""

import json
from io import BytesIO, StringIO
from pathlib import Path

import openpyxl
import pandas as pd
import pytest

import cli
from cli import build_parser, main, parse_degrees, parse_range
from errors import AlgebraError
from harness import REFERENCE_SYSTEM, TABLE_COLUMNS
from settings import DEFAULT_SETTINGS
from views.custom_logging import configure_logging

GOLDEN = Path(__file__).parent / "golden" / "tables.csv"


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    configure_logging(DEFAULT_SETTINGS)


@pytest.fixture
def reference_file(tmp_path):
    path = tmp_path / "reference.txt"
    path.write_text(REFERENCE_SYSTEM, encoding="utf-8")
    return str(path)


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_parse_helpers():
    assert parse_degrees("3x2,2") == [3, 3, 2]
    assert parse_range("4..6") == (4, 6)
    assert parse_range("5") == (5, 5)
    with pytest.raises(AlgebraError):
        parse_degrees("2y")
    with pytest.raises(AlgebraError):
        parse_range("6..4")


def _csv(capsys):
    return pd.read_csv(StringIO(capsys.readouterr().out))


def test_bounds(capsys):
    assert main(["bounds", "--n", "3", "--degrees", "2x4"]) == 0
    frame = _csv(capsys)
    assert list(frame.columns) == TABLE_COLUMNS
    assert frame.loc[0, "lazard"] == 5
    assert frame.loc[0, "d"] == 3
    assert frame.loc[0, "d_new"] == 5


def test_bounds_m_range(capsys):
    assert main(["bounds", "--n", "9", "--degrees", "2x10", "--m-range", "10..12"]) == 0
    frame = _csv(capsys)
    assert frame["m"].tolist() == [10, 11, 12]
    assert frame["d_new"].tolist() == [11, 6, 6]


def test_bounds_profile_matches_golden_rows(capsys):
    assert main(["bounds", "--n", "9", "--profile", "cubic-head", "--m-range", "10..18"]) == 0
    out = capsys.readouterr().out
    golden = GOLDEN.read_text(encoding="utf-8").splitlines()
    expected = [golden[0]] + [line for line in golden if line.startswith("cubic-head,9,")]
    assert out.splitlines() == expected


def test_bounds_with_omega_and_s0(capsys):
    assert main(["bounds", "--n", "1", "--degrees", "1", "--omega", "2", "--s0", "2"]) == 0
    frame = _csv(capsys)
    assert frame.loc[0, "complexity_full"] == 8
    assert frame.loc[0, "complexity_without_zero_reductions"] == 5
    assert frame.loc[0, "d_plus_s0"] == 3
    assert pd.isna(frame.loc[0, "degree_sum_bound"])


def test_usage_errors(capsys):
    assert main(["bounds", "--n", "3", "--degrees", "2y"]) == 2
    assert main(["bounds", "--n", "3"]) == 2
    assert main(["bounds", "--n", "9", "--profile", "uniform"]) == 2
    assert main(["no-such-command"]) == 2
    assert main(["survey", "--n", "2"]) == 2
    assert main(["gb", "--in", "/nonexistent/system.txt"]) == 2
    assert "fel:" in capsys.readouterr().err


def test_tables_match_golden(capsys):
    assert main(["tables"]) == 0
    assert capsys.readouterr().out == GOLDEN.read_text(encoding="utf-8")


def test_tables_xlsx(tmp_path, capsys):
    path = tmp_path / "granser.xlsx"
    assert main(["tables", "--xlsx", str(path)]) == 0
    workbook = openpyxl.load_workbook(BytesIO(path.read_bytes()))
    assert workbook.sheetnames == ["Gränser"]


def test_example1(capsys):
    assert main(["example1"]) == 0
    data = _json(capsys)
    assert data["status"] == "pass"


def test_gb(reference_file, capsys):
    assert main(["gb", "--in", reference_file]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[:4] == ["x1", "x2", "x3", ""]
    assert lines[4] == "LM: x1, x2, x3"


def test_gb_to_file(reference_file, tmp_path):
    out = tmp_path / "gb.txt"
    assert main(["gb", "--in", reference_file, "--order", "hdrl", "--out", str(out)]) == 0
    text = out.read_text(encoding="utf-8")
    assert text.startswith("x1*y^3\n")
    assert '"max_gb_degree": 4' in text


def test_hilbert_homogenized(reference_file, capsys):
    assert main(["hilbert", "--in", reference_file, "--homogenize"]) == 0
    data = _json(capsys)
    assert data["d_reg"] == "infinity"
    assert data["gen_d_reg"] == 4
    assert data["N"] == 1


def test_solve_degree_homogenized(reference_file, capsys):
    assert main(["solve-degree", "--in", reference_file, "--homogenize", "--dmax", "6"]) == 0
    data = _json(capsys)
    assert data["max_gb_degree"] == 4
    assert data["sd_mac"] == 4
    assert data["sd_mut"] == 4


def test_analyze(reference_file, capsys):
    assert main(["analyze", "--in", reference_file]) == 0
    data = _json(capsys)
    assert data["report"]["D"] == 3
    assert all(v["status"] == "pass" for v in data["verdicts"])


def test_log_path_writes_json_lines(tmp_path, capsys):
    log_file = tmp_path / "logs" / "cli.jsonl"
    assert main(["--log-path", str(log_file), "tables"]) == 0
    entries = [json.loads(line) for line in log_file.read_text(encoding="utf-8").splitlines()]
    assert entries
    assert {"action", "description", "category", "timestamp"} <= set(entries[0])


def _fake_survey(telemetry):
    def run(cfg):
        totals = {"trials": 1, "hilbert_violations": 0, "lm_violations": 0, "bound_violations": 0,
                  "chain_violations": 0, "dehom_violations": 0, "telemetry_violations": telemetry}
        return {"schema_version": 1, "config": cfg.as_dict(), "cells": [], "totals": totals, "trials": []}
    return run


def test_survey_telemetry_fails_unless_warn_only(monkeypatch, capsys):
    monkeypatch.setattr(cli, "survey_results", _fake_survey(1))
    assert main(["survey", "--n", "2", "--m", "3", "--trials", "1"]) == 1
    assert main(["survey", "--n", "2", "--m", "3", "--trials", "1", "--telemetry-warn-only"]) == 0
    monkeypatch.setattr(cli, "survey_results", _fake_survey(0))
    assert main(["survey", "--n", "2", "--m", "3", "--trials", "1"]) == 0


def test_oracle_defaults_and_run(capsys):
    assert build_parser().parse_args(["oracle"]).trials == 100
    assert main(["oracle", "--trials", "3", "--seed", "2"]) == 0
    data = _json(capsys)
    assert data["config"]["max_degree"] == 6
    assert data["checked"] + data["skipped"] == 3
