"""Tester för kroppsaritmetik, monomordningar och polynom."""

import pytest

from errors import AlgebraError, FieldError, RingMismatchError, SingularTransformError, ZeroPolynomialError
from field_poly import (
    MonomialOrder,
    OrderKind,
    PolyRing,
    PolySystem,
    PrimeField,
    apply_linear_transform,
    dehomogenize,
    homogenize,
    monomials_of_degree,
    monomials_up_to,
    poly_arith,
    random_homogeneous_system,
    random_system,
    top_part,
    transform_sending_to_last,
)


@pytest.fixture
def ring():
    return PolyRing(3, 7)


def test_modulus_must_be_odd_prime():
    for q in (2, 4, 9, 1):
        with pytest.raises(FieldError):
            PolyRing(2, q)
    with pytest.raises(FieldError):
        PrimeField(2 ** 31 + 11)


def test_field_inverse():
    field = PrimeField(7)
    assert field.inv(3) == 5
    assert int(field.element(3) / 3) == 1
    with pytest.raises(FieldError):
        field.inv(14)


def test_drl_degree_two_in_three_variables():
    order = MonomialOrder(OrderKind.DRL, 3)
    assert monomials_of_degree(order, 2) == (
        (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2),
    )


def test_homogenized_drl_puts_y_last():
    order = MonomialOrder(OrderKind.HOMOGENIZED_DRL, 2)
    assert monomials_of_degree(order, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert order.greater((0, 2, 0), (1, 0, 1))


def test_monomials_up_to_ends_with_one():
    order = MonomialOrder(OrderKind.DRL, 2)
    monos = monomials_up_to(order, 2)
    assert len(monos) == 6
    assert monos[0] == (2, 0)
    assert monos[-1] == (0, 0)


def test_arithmetic_mod_q(ring):
    x1, x2 = ring.gen(0), ring.gen(1)
    f = (x1 + x2) * (x1 - x2)
    assert f == x1 ** 2 - x2 ** 2
    assert str(f) == "x1^2 + 6*x2^2"
    assert (f + (-f)).is_zero
    assert (x1 * 7).is_zero
    assert f.lm == (2, 0, 0)
    assert f.lc == 1


def test_poly_arith(ring):
    x1, x2 = ring.gen(0), ring.gen(1)
    assert poly_arith(x1, x2, "add") == x1 + x2
    assert poly_arith(x1, x1, "sub").is_zero
    assert poly_arith(x1, x2, "mul") == x1 * x2
    with pytest.raises(AlgebraError):
        poly_arith(x1, x2, "div")


def test_terms_sorted_descending(ring):
    f = ring.gen(2) + ring.gen(0) ** 2 + ring.constant(3)
    assert [m for m, _ in f.terms] == [(2, 0, 0), (0, 0, 1), (0, 0, 0)]
    assert f.degree == 2
    assert not f.is_homogeneous()


def test_zero_polynomial_has_no_leading_monomial(ring):
    with pytest.raises(ZeroPolynomialError):
        ring.zero().lm
    assert ring.zero().degree == -1


def test_mixing_rings_is_rejected(ring):
    other = PolyRing(3, 11)
    with pytest.raises(RingMismatchError):
        ring.gen(0) + other.gen(0)


def test_monic(ring):
    f = ring.gen(0) * 3 + ring.constant(1)
    g = f.monic()
    assert g.lc == 1
    assert g.coefficient((0, 0, 0)) == 5


def test_homogenize_and_back(ring):
    f = ring.gen(0) ** 2 + ring.gen(1) + ring.constant(1)
    h = homogenize(f)
    assert h.ring.homogenized
    assert h.is_homogeneous()
    assert h.coefficient((0, 1, 0, 1)) == 1
    assert h.coefficient((0, 0, 0, 2)) == 1
    assert dehomogenize(h) == f


def test_homogenize_zero_raises(ring):
    with pytest.raises(ZeroPolynomialError):
        homogenize(ring.zero())


def test_top_part(ring):
    f = ring.gen(0) * ring.gen(1) + ring.gen(2) ** 2 + ring.gen(0)
    assert top_part(f) == ring.gen(0) * ring.gen(1) + ring.gen(2) ** 2
    h = homogenize(f)
    assert top_part(h) == top_part(f)


def test_transform_sending_linear_form_to_last(ring):
    ell = ring.gen(0) + ring.gen(1) * 2 + ring.gen(2)
    P = transform_sending_to_last(ell)
    assert [row[2] for row in P] == [6, 5, 1]
    assert apply_linear_transform(ell, P) == ring.gen(2)


def test_singular_transform(ring):
    with pytest.raises(SingularTransformError):
        apply_linear_transform(ring.gen(0), [[1, 0, 0], [1, 0, 0], [0, 0, 1]])
    with pytest.raises(SingularTransformError):
        transform_sending_to_last(ring.gen(0) + ring.gen(1))


def test_polysystem_validation(ring):
    with pytest.raises(AlgebraError):
        PolySystem((ring.constant(1),))
    with pytest.raises(RingMismatchError):
        PolySystem((ring.gen(0), PolyRing(3, 11).gen(0)))
    F = PolySystem((ring.gen(0) ** 2, ring.gen(1) + ring.constant(1)))
    assert F.degrees == (2, 1)
    assert F.m == 2 and F.n == 3
    assert not F.is_homogeneous
    assert F.homogenize().is_homogeneous


def test_random_system_is_reproducible():
    F = random_system(3, [2, 2, 3], 31, seed=5)
    G = random_system(3, [2, 2, 3], 31, seed=5)
    assert F == G
    assert F.degrees == (2, 2, 3)
    assert all(f.coefficient((0, 0, 0)) == 0 for f in F)


def test_random_system_rejects_linear_equations():
    with pytest.raises(AlgebraError):
        random_system(3, [1, 2], 31, seed=0)


def test_random_homogeneous_system():
    F = random_homogeneous_system(2, [1, 3], 31, seed=1)
    assert F.is_homogeneous
    assert F.degrees == (1, 3)
