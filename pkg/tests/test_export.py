"""Tester för Excel-exporten och loggexporten."""

from io import BytesIO

import openpyxl
import pandas as pd

from harness import TABLE_COLUMNS
from views.admin import logs_to_excel
from views.export_data import create_excel_file, survey_frames

SURVEY = {
    "schema_version": 1,
    "config": {"n": 2, "m_range": [3, 3]},
    "cells": [{
        "m": 3, "trials": 2, "completed": 2, "skipped": 1, "errors": 0,
        "csr_rate": 1.0, "gcsr_rate": 0.5, "wrl_rate": 0.5,
        "hilbert_violations": 0, "lm_violations": 0, "bound_violations": 0,
        "chain_violations": 0, "dehom_violations": 0, "telemetry_violations": 0,
        "joint": {"A_and_B": 1, "A_not_B": 0, "B_not_A": 0, "neither": 1},
        "seeds": [11, 12],
    }],
    "totals": {"trials": 2},
    "trials": [
        {"index": 0, "seed": 11, "status": "ok", "m": 3, "bound_violations": [], "chain_violations": ["a", "b"]},
        {"index": 1, "seed": 12, "status": "skipped", "m": 3},
    ],
}


def _workbook(data):
    return openpyxl.load_workbook(BytesIO(data))


def test_default_file_has_bound_tables():
    workbook = _workbook(create_excel_file())
    assert workbook.sheetnames == ["Gränser"]
    sheet = workbook["Gränser"]
    assert [cell.value for cell in sheet[1]] == TABLE_COLUMNS
    assert sheet.cell(row=1, column=1).fill.fgColor.rgb.endswith("00A68A")
    assert sheet.max_row == 39


def test_survey_frames():
    cells_df, trials_df = survey_frames(SURVEY)
    assert "seeds" not in cells_df.columns
    assert cells_df.loc[0, "joint_A_and_B"] == 1
    assert trials_df.loc[0, "chain_violations"] == "a; b"


def test_survey_sheets():
    workbook = _workbook(create_excel_file(survey=SURVEY))
    assert workbook.sheetnames == ["Undersökning", "Försök"]
    assert workbook["Försök"].max_row == 3


def test_logs_to_excel():
    assert logs_to_excel(pd.DataFrame(columns=["action", "description", "category", "timestamp"])) is None
    logs = pd.DataFrame([
        {"action": "compute", "description": "a", "category": "groebner", "timestamp": "t1"},
        {"action": "violation", "description": "b", "category": "survey", "timestamp": "t2"},
        {"action": "compute", "description": "c", "category": "hilbert", "timestamp": "t3"},
    ])
    workbook = _workbook(logs_to_excel(logs))
    assert workbook.sheetnames == ["Compute", "Violation"]
    assert workbook["Compute"].max_row == 3
    assert workbook["Compute"].cell(row=2, column=2).value == "COMPUTE"
