"""Tester för Macaulaymatriser, sd_mac och sd_mut."""

import numpy as np
import pytest

from errors import DegreeError
from field_poly import PolyRing, PolySystem, random_system
from groebner import buchberger
from harness import reference_system
from macaulay import build_macaulay, rref, sd_mac, sd_mut


@pytest.fixture
def system():
    ring = PolyRing(2, 7)
    x1, x2 = ring.gen(0), ring.gen(1)
    return PolySystem((x1 ** 2 + x2, x1 * x2))


def test_build_macaulay_shape_and_order(system):
    M = build_macaulay(system, 3)
    assert M.shape == (6, 10)
    assert M.columns[0] == (3, 0)
    assert M.columns[-1] == (0, 0)
    # Första raden är x1·f_1
    assert M.rows[0] == ((1, 0), 0)
    assert M.matrix[0, M.columns.index((3, 0))] == 1
    assert M.matrix[0, M.columns.index((1, 1))] == 1


def test_build_macaulay_errors(system):
    with pytest.raises(DegreeError):
        build_macaulay(system, 1)
    with pytest.raises(DegreeError):
        build_macaulay(system, 3, homogeneous=True)


def test_rref_of_raw_matrix_needs_modulus():
    with pytest.raises(DegreeError):
        rref(np.array([[2, 4]]))
    assert rref(np.array([[2, 4], [1, 2]]), q=5).rank == 1


def test_rref_rows_are_polynomials(system):
    result = rref(build_macaulay(system, 2))
    assert result.rank == 2
    assert set(result.leading_monomials) == {(2, 0), (1, 1)}


def test_sd_mac_small_example(system):
    result = sd_mac(system, 5)
    assert result.degree == 3
    assert not result.exceeded
    assert result.as_dict()["matrix_dims_per_degree"] == [[2, 2, 6], [3, 6, 10]]


def test_sd_mac_reports_exceeded(system):
    result = sd_mac(system, 2)
    assert result.exceeded
    assert result.as_dict()["degree"] is None


def test_sd_mut_small_example(system):
    assert sd_mut(system, 5).degree == 3


def test_homogeneous_solving_degree_equals_max_gb_degree():
    F = reference_system().homogenize()
    G = buchberger(F).reduced_basis
    assert sd_mac(F, 6, G).degree == 4
    assert sd_mut(F, 6, G).degree == 4


@pytest.mark.parametrize("seed", [3, 4])
def test_chain_on_random_systems(seed):
    F = random_system(3, [2, 2, 2, 2], 31, seed)
    trace = buchberger(F)
    mac = sd_mac(F, 7, trace.reduced_basis)
    mut = sd_mut(F, 7, trace.reduced_basis)
    if not mac.exceeded:
        assert not mut.exceeded
        assert trace.max_gb_degree <= mut.degree <= mac.degree


def test_reference_system_affine_solving_degrees():
    F = reference_system()
    G = buchberger(F).reduced_basis
    assert sd_mac(F, 6, G).degree == 4
    assert sd_mut(F, 6, G).degree == 3


@pytest.mark.parametrize("seed", [0, 3, 4])
def test_mutants_finish_below_plain_macaulay(seed):
    F = random_system(3, [2, 2, 2, 2], 31, seed)
    G = buchberger(F).reduced_basis
    assert sd_mut(F, 6, G).degree == 3
    assert sd_mac(F, 6, G).degree == 4
