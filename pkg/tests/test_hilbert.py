"""Tester för monomideal, Hilbertserier och regularitetsgrader."""

import pytest

from errors import AlgebraError, DegreeError
from hilbert import INFINITY, MonomialIdeal, hilbert_function, hilbert_series, lm_ideal, regularity_degrees
from regularity import analyze_system
from harness import reference_system


def test_minimal_generators():
    J = MonomialIdeal([(2, 0), (2, 1), (1, 1)], 2)
    assert J.generators == ((1, 1), (2, 0))
    assert (3, 1) in J
    assert (0, 5) not in J
    assert J == MonomialIdeal([(1, 1), (2, 0)], 2)


def test_wrong_length_is_rejected():
    with pytest.raises(AlgebraError):
        MonomialIdeal([(1, 0, 0)], 2)


def test_hilbert_function_and_series():
    J = MonomialIdeal([(2, 0), (1, 1), (0, 2)], 2)
    assert [hilbert_function(J, d) for d in range(4)] == [1, 2, 0, 0]
    assert hilbert_series(J, cross_check_cap=6) == (1, 0, -3, 2)
    with pytest.raises(DegreeError):
        hilbert_function(J, -1)


def test_artinian_summary():
    summary = regularity_degrees(MonomialIdeal([(2, 0), (1, 1), (0, 2)], 2))
    assert summary.hs_numerator == (1, 2)
    assert summary.k == 0
    assert summary.d_reg == summary.gen_d_reg == 2
    assert summary.artinian
    assert summary.hf == (1, 2, 0, 0)


def test_zero_dimensional_summary():
    summary = regularity_degrees(MonomialIdeal([(1, 0)], 2))
    assert summary.k == 1
    assert summary.d_reg is INFINITY
    assert summary.gen_d_reg == 0
    assert summary.hilbert_poly_constant == 1
    assert summary.zero_dimensional
    assert summary.as_dict()["d_reg"] == "infinity"


def test_higher_dimension_summary():
    summary = regularity_degrees(MonomialIdeal([(1, 0, 0)], 3))
    assert summary.k == 2
    assert summary.d_reg is INFINITY
    assert summary.gen_d_reg is INFINITY
    assert summary.hilbert_poly_constant is None


def test_unit_ideal():
    summary = regularity_degrees(MonomialIdeal([(0, 0)], 2), cap=3)
    assert summary.hf == (0, 0, 0, 0)
    assert summary.d_reg == 0


def test_pivot_recursion_on_mixed_generators():
    J = MonomialIdeal([(2, 1, 0), (0, 2, 1), (1, 0, 2), (3, 0, 0), (0, 3, 0), (0, 0, 3)], 3)
    numerator = hilbert_series(J, cross_check_cap=8)
    assert sum(numerator) == 0


def test_lm_ideal_requires_nonzero_basis():
    with pytest.raises(AlgebraError):
        lm_ideal([])


def test_reference_hilbert_data():
    analysis = analyze_system(reference_system())
    assert analysis.top_summary.hs_numerator == (1, 3, 2)
    assert analysis.D == 3
    J_hom = lm_ideal(analysis.hom_trace.reduced_basis)
    assert [hilbert_function(J_hom, d) for d in range(6)] == [1, 4, 6, 4, 1, 1]
    assert analysis.D_prime == 4
    assert analysis.hom_summary.hilbert_poly_constant == 1
