"""Tester för textformatet och JSON-spegeln."""

import json

import pytest

from errors import ParseError
from harness import REFERENCE_SYSTEM
from system_io import format_system, parse_system, read_system, system_from_json, system_to_json


def test_reference_system_parses():
    F = parse_system(REFERENCE_SYSTEM)
    assert F.ring.q == 73
    assert F.ring.variable_names == ("x1", "x2", "x3")
    assert F.degrees == (2, 2, 2, 2)
    # −2 blir 71 i F_73
    assert F[0].coefficient((1, 0, 1)) == 71


def test_comments_and_blank_lines_are_skipped():
    F = parse_system("# kommentar\n\nring q=7 vars=a,b\n\na^2 + b\n# slut\n")
    assert F.m == 1
    assert F[0].coefficient((2, 0)) == 1


def test_rational_coefficients_reduce_mod_q():
    F = parse_system("ring q=7 vars=x,z\n1/2*x^2 + z\n")
    assert F[0].coefficient((2, 0)) == 4


def test_parse_error_carries_line_number():
    with pytest.raises(ParseError) as info:
        parse_system("ring q=7 vars=x,z\nx^2 +\n")
    assert info.value.line == 2
    assert str(info.value).startswith("rad 2:")


def test_bad_header():
    with pytest.raises(ParseError) as info:
        parse_system("ring q=8 vars=x\nx^2\n")
    assert info.value.line == 1
    with pytest.raises(ParseError):
        parse_system("x^2 + 1\n")


def test_constants_and_zero_rows_are_rejected():
    with pytest.raises(ParseError):
        parse_system("ring q=7 vars=x\n3\n")
    with pytest.raises(ParseError):
        parse_system("ring q=7 vars=x\nx - x\n")
    with pytest.raises(ParseError):
        parse_system("ring q=7 vars=x\n")


def test_y_is_reserved_for_homogenization():
    with pytest.raises(ParseError):
        parse_system("ring q=7 vars=y,x\nx^2\n")
    F = parse_system("ring q=7 vars=x,y\nx^2 + x*y\n")
    assert F.ring.homogenized
    assert F.ring.variable_names == ("x", "y")


def test_homogenized_system_parses_back():
    F = parse_system(REFERENCE_SYSTEM).homogenize()
    text = format_system(F)
    assert text.startswith("ring q=73 vars=x1,x2,x3,y\n")
    assert parse_system(text) == F


def test_format_system_parses_back():
    F = parse_system(REFERENCE_SYSTEM)
    assert parse_system(format_system(F)) == F


def test_json_mirror(tmp_path):
    F = parse_system(REFERENCE_SYSTEM)
    data = system_to_json(F)
    assert data["q"] == 73
    assert data["vars"] == ["x1", "x2", "x3"]
    path = tmp_path / "system.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    assert read_system(str(path)) == F
    with pytest.raises(ParseError):
        system_from_json({"q": 73})
