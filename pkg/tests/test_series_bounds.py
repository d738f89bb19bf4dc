"""Tester för trunkerade serier och gradgränser."""

import pytest

from errors import BoundError, SeriesOverflowError
from series_bounds import (
    TruncatedSeries,
    bound_report,
    bracket_truncate,
    complexity_estimate,
    d_new,
    d_reg_formula,
    degree_sum_bound,
    homogenized_series,
    lazard_bound,
    product_series,
    semiregular_series,
)


def test_series_arithmetic():
    a = TruncatedSeries((1, 2, 3))
    b = TruncatedSeries((1, -1, 0, 5))
    assert (a + b).coeffs == (2, 1, 3)
    assert (a - b).coeffs == (0, 3, 3)
    assert (a * b).coeffs == (1, 1, 1)
    assert a.cap == 2
    assert a.coefficient(7) == 0


def test_divide_by_one_minus_z():
    s = TruncatedSeries((1, 0, 0, 0, 0)).divide_by_one_minus_z(2)
    assert s.coeffs == (1, 2, 3, 4, 5)


def test_overflow_is_reported():
    with pytest.raises(SeriesOverflowError):
        TruncatedSeries((2 ** 127,))


def test_product_series_four_quadrics_in_three_variables():
    s = product_series(3, [2, 2, 2, 2], 4)
    assert s.coeffs == (1, 3, 2, -2, -3)
    assert bracket_truncate(s).coeffs == (1, 3, 2, 0, 0)


def test_product_series_keeps_coefficients():
    s = product_series(9, [3] * 9 + [2], 4)
    assert s.coeffs == (1, 9, 44, 147, 369)
    assert TruncatedSeries(c for c in (1, 2)).coeffs == (1, 2)


def test_semiregular_and_homogenized_series():
    assert semiregular_series(3, [2, 2, 2, 2], cap=5).coeffs == (1, 3, 2, 0, 0, 0)
    assert homogenized_series(3, [2, 2, 2, 2], cap=6).coeffs == (1, 4, 6, 4, 1, 0, 0)
    assert str(semiregular_series(3, [2, 2, 2, 2], cap=3)) == "1 + 3*z + 2*z^2"


def test_polynomial_ring_series_without_equations():
    assert semiregular_series(2, [], cap=3).coeffs == (1, 2, 3, 4)


def test_degree_formulas():
    assert d_reg_formula(3, [2, 2, 2, 2]) == 3
    assert d_new(3, [2, 2, 2, 2]) == 5
    assert d_reg_formula(2, [2, 2]) == 3


def test_d_new_for_square_systems_equals_d():
    assert d_new(2, [2, 2]) == d_reg_formula(2, [2, 2])
    with pytest.raises(BoundError):
        d_new(3, [2, 2])


def test_lazard_bound():
    assert lazard_bound(3, [2, 2, 2, 2]) == 5
    assert lazard_bound(9, [3] * 9 + [2]) == 20
    assert lazard_bound(2, [4]) == 4


def test_degree_sum_bound():
    assert degree_sum_bound(3, [2, 2, 2, 2]) == (5, 5)
    assert degree_sum_bound(9, [3] * 9 + [2]) == (20, 20)
    # d_m = 9 överstiger D_1 = 2, den förfinade gränsen gäller inte
    assert degree_sum_bound(2, [2, 2, 2, 9]) == (11, None)
    with pytest.raises(BoundError):
        degree_sum_bound(3, [2, 2, 2])


def test_complexity_estimate():
    estimate = complexity_estimate(1, 1, 1, 2)
    assert (estimate.full, estimate.without_zero_reductions, estimate.per_degree) == (8, 5, 1)
    with pytest.raises(BoundError):
        complexity_estimate(1, 1, 1, 3.5)
    with pytest.raises(BoundError):
        complexity_estimate(1, 1, 0, 2)


def test_complexity_grows_with_omega():
    low = complexity_estimate(4, 8, 3, 2)
    high = complexity_estimate(4, 8, 3, "2.81")
    assert high.full > low.full
    assert high.per_degree > low.per_degree


def test_bound_report():
    report = bound_report(3, [2, 2, 2, 2], s0=1)
    assert report.as_dict() == {
        "lazard": 5,
        "degree_sum_main": 5,
        "degree_sum_refined": 5,
        "d_reg_formula": 3,
        "d_new": 5,
        "two_d_minus_1": 5,
        "two_d_minus_2": 4,
        "d_plus_s0": 4,
    }


def test_bound_report_underdetermined():
    report = bound_report(3, [2, 2])
    assert report.d_reg_formula is None
    assert report.d_new is None
    assert report.degree_sum_main is None
    assert report.lazard == 3
