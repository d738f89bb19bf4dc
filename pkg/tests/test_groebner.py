"""Tester för Buchbergers algoritm, normalformer och mättnad."""

import pytest
import sympy

from errors import AlgebraError, ZeroPolynomialError
from field_poly import PolyRing, PolySystem, monomials_of_degree, random_system
from groebner import buchberger, interreduce, is_groebner, normal_form, saturation_exponent, spoly
from harness import reference_system
from linalg import rank_mod


@pytest.fixture
def ring():
    return PolyRing(2, 7)


@pytest.fixture
def system(ring):
    x1, x2 = ring.gen(0), ring.gen(1)
    return PolySystem((x1 ** 2 + x2, x1 * x2))


def _assert_reduced(G):
    lms = [g.lm for g in G]
    for g in G:
        assert g.lc == 1
        others = [lm for lm in lms if lm != g.lm]
        for m, _ in g.terms:
            assert not any(all(a <= b for a, b in zip(lm, m)) for lm in others)


def test_spoly(ring, system):
    x2 = ring.gen(1)
    assert spoly(system[0], system[1]) == x2 ** 2
    with pytest.raises(ZeroPolynomialError):
        spoly(ring.zero(), system[0])


def test_normal_form(ring, system):
    G = buchberger(system).reduced_basis
    assert normal_form(ring.gen(0) ** 3, G).is_zero
    assert normal_form(ring.gen(1), G) == ring.gen(1)
    with pytest.raises(AlgebraError):
        normal_form(ring.gen(0), [])


def test_buchberger_small_example(ring, system):
    trace = buchberger(system)
    x1, x2 = ring.gen(0), ring.gen(1)
    assert trace.reduced_basis == (x1 ** 2 + x2, x1 * x2, x2 ** 2)
    assert trace.step_degrees == (3, 3)
    assert trace.spoly_degrees == (2,)
    assert trace.max_gb_degree == 2
    assert trace.sd_step == 3
    assert trace.sd_strict == 2
    assert trace.zero_reductions == 1


@pytest.mark.parametrize("strategy", ["normal", "sugar"])
@pytest.mark.parametrize("tie_break", ["oldest", "newest"])
def test_reduced_basis_does_not_depend_on_strategy(system, strategy, tie_break):
    assert buchberger(system, strategy, tie_break).reduced_basis == buchberger(system).reduced_basis


def test_unknown_strategy(system):
    with pytest.raises(AlgebraError):
        buchberger(system, "random")
    with pytest.raises(AlgebraError):
        buchberger(system, "normal", "middle")


def test_interreduce(ring):
    x1, x2 = ring.gen(0), ring.gen(1)
    assert interreduce([x1 + x2, x1 * 2, x2]) == [x1, x2]
    assert interreduce([ring.zero()]) == []


def test_is_groebner(ring, system):
    assert not is_groebner(list(system))
    assert is_groebner(buchberger(system).reduced_basis)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_random_systems_give_reduced_groebner_bases(seed):
    F = random_system(3, [2, 2, 2, 2], 31, seed)
    trace = buchberger(F)
    G = trace.reduced_basis
    assert is_groebner(G)
    _assert_reduced(G)
    assert all(normal_form(f, G).is_zero for f in F)
    assert trace.max_gb_degree <= trace.sd_step
    assert trace.sd_strict <= trace.sd_step
    assert buchberger(F, "sugar").reduced_basis == G


def test_reference_basis_is_the_maximal_ideal():
    G = buchberger(reference_system()).reduced_basis
    assert [str(g) for g in G] == ["x1", "x2", "x3"]


def test_homogenized_trace_telemetry():
    trace = buchberger(reference_system().homogenize())
    telemetry = trace.telemetry()
    assert telemetry["max_gb_degree"] == 4
    assert len(trace.reduced_basis) == 11
    assert set(telemetry) == {"step_degrees", "sd_step", "sd_strict", "max_gb_degree", "zero_reductions"}


def test_saturation_exponent_of_reference():
    result = saturation_exponent(reference_system())
    assert result.s0 == 3
    assert result.exponents == (3, 3, 3)
    assert [str(g) for g in result.saturation_basis] == ["x1", "x2", "x3"]


def test_saturation_rejects_homogenized_input():
    with pytest.raises(AlgebraError):
        saturation_exponent(reference_system().homogenize())


def _colon_dims(G_hom, k, top_degree):
    """dim (⟨F^h⟩ : y^k)_d för d ≤ top_degree, via kärnan av u ↦ NF(y^k·u)."""
    ring = G_hom[0].ring
    order = ring.order
    y_k = ring.monomial((0,) * ring.n + (k,))
    dims = []
    for d in range(top_degree + 1):
        monos = monomials_of_degree(order, d)
        columns = {m: j for j, m in enumerate(monomials_of_degree(order, d + k))}
        matrix = []
        for u in monos:
            row = [0] * len(columns)
            for m, c in normal_form(ring.monomial(u) * y_k, G_hom).terms:
                row[columns[m]] = c
            matrix.append(row)
        dims.append(len(monos) - rank_mod(matrix, ring.q))
    return dims


def _colon_ascent_exponent(F, k_max=8):
    G_hom = list(buchberger(F.homogenize()).reduced_basis)
    top_degree = max(g.degree for g in saturation_exponent(F).saturation_basis)
    dims = [_colon_dims(G_hom, k, top_degree) for k in range(k_max + 1)]
    return next(k for k in range(k_max + 1) if dims[k] == dims[k_max])


def _crossed_squares():
    x1, x2 = PolyRing(2, 7).gen(0), PolyRing(2, 7).gen(1)
    return PolySystem((x1 ** 2 + x2, x2 ** 2 + x1))


@pytest.mark.parametrize("build, expected", [(reference_system, 3), (_crossed_squares, 0)])
def test_saturation_exponent_matches_colon_ascent(build, expected):
    F = build()
    assert _colon_ascent_exponent(F) == expected
    assert saturation_exponent(F).s0 == expected


def _to_sympy(f, symbols):
    return sympy.Add(*(c * sympy.Mul(*(x ** e for x, e in zip(symbols, m))) for m, c in f.terms))


def _from_sympy(expr, symbols, q):
    poly = sympy.Poly(expr, *symbols, modulus=q)
    return {tuple(m): int(c) % q for m, c in poly.terms()}


@pytest.mark.parametrize("seed", [0, 1])
def test_reduced_basis_matches_sympy(seed):
    F = random_system(3, [2, 2, 2, 2], 31, seed)
    symbols = sympy.symbols(F.ring.variable_names)
    expected = sympy.groebner([_to_sympy(f, symbols) for f in F], *symbols, modulus=31, order="grevlex")
    computed = [dict(g.terms) for g in buchberger(F).reduced_basis]
    oracle = [_from_sympy(g, symbols, 31) for g in expected.exprs]
    assert sorted(sorted(g.items()) for g in computed) == sorted(sorted(g.items()) for g in oracle)
