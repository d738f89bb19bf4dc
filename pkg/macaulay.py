"""
Macaulaymatriser och lösningsgraderna sd_mac och sd_mut

1. build_macaulay
   - Rader (t, j) för t·f_j med deg(t·f_j) ≤ d, generatorer i indataordning
     och multiplikatorer fallande
   - Kolumner: alla monom av grad ≤ d, fallande (monomet 1 sist)
   - homogeneous=True ger blocket av grad exakt d

2. rref
   - Exakt RREF över F_q via linalg.rref_blocked
   - Radpolynomen läses av raderna, rangen är antalet pivåer

3. sd_mac
   - Minsta d där raderna i RREF innehåller en Gröbnerbas
   - Test: varje LM i referensbasen är delbart med något pivåmonom

4. sd_mut
   - Samma start som sd_mac, men rader av grad < d vars LM inte är ett
     ursprungligt rad-LM (mutanter) multipliceras upp till grad d
   - Upprepas tills rangen slutar växa, Gröbnertestet görs efter varje RREF

Tekniska detaljer:
- Ett homogent system är blockdiagonalt per grad, så blocken radreduceras var
  för sig och pivåerna samlas ihop. Mutanter kan då inte uppstå.
- "Överskriden" (inget d ≤ d_max räckte) är ett resultat, inte ett fel
"""

from dataclasses import dataclass

import numpy as np

from errors import DegreeError
from field_poly import (
    Polynomial,
    PolySystem,
    divides,
    mono_mul,
    monomials_of_degree,
    monomials_up_to,
)
from groebner import buchberger
from linalg import rref_blocked
from views.custom_logging import log_action


@dataclass(frozen=True)
class MacaulayMatrix:
    ring: object
    degree: int
    rows: tuple
    columns: tuple
    matrix: np.ndarray
    homogeneous: bool = False

    @property
    def shape(self):
        return self.matrix.shape


@dataclass(frozen=True)
class RrefResult:
    pivot_columns: tuple
    basis_polys: tuple
    rank: int
    matrix: np.ndarray

    @property
    def leading_monomials(self):
        return tuple(f.lm for f in self.basis_polys)


def _row_vector(f, index, width):
    row = np.zeros(width, dtype=np.int64)
    for m, c in f.terms:
        row[index[m]] = c
    return row


def build_macaulay(F, d, homogeneous=False):
    """
    Bygger Macaulaymatrisen M_{≤d}(F), eller blocket M_d(F) om homogeneous=True.

    Raises:
        DegreeError: om d är mindre än alla generatorgrader, eller om blocket
        begärs för ett inhomogent system
    """
    if not isinstance(F, PolySystem):
        F = PolySystem(tuple(F))
    if homogeneous and not F.is_homogeneous:
        raise DegreeError("blocket av exakt grad d kräver ett homogent system")
    ring = F.ring
    order = ring.order
    if homogeneous:
        columns = tuple(monomials_of_degree(order, d))
    else:
        columns = tuple(monomials_up_to(order, d))
    index = {m: i for i, m in enumerate(columns)}

    labels = []
    vectors = []
    for j, f in enumerate(F):
        slack = d - f.degree
        if slack < 0:
            continue
        multipliers = monomials_of_degree(order, slack) if homogeneous else monomials_up_to(order, slack)
        for t in multipliers:
            labels.append((t, j))
            vectors.append(_row_vector(f.mul_term(t), index, len(columns)))

    if not labels:
        raise DegreeError(f"inga rader i grad {d}: minsta generatorgrad är {min(F.degrees)}")
    return MacaulayMatrix(
        ring=ring,
        degree=d,
        rows=tuple(labels),
        columns=columns,
        matrix=np.vstack(vectors),
        homogeneous=homogeneous,
    )


def _rows_to_polys(ring, columns, reduced):
    polys = []
    for row in reduced:
        nonzero = np.nonzero(row)[0]
        polys.append(Polynomial(ring, tuple((columns[i], int(row[i])) for i in nonzero)))
    return tuple(polys)


def rref(M, q=None):
    """
    RREF av en Macaulaymatris (eller en godtycklig tät matris om q anges).

    Returns:
        RrefResult: Pivåkolumner, radpolynom (tomt för rena matriser) och rang
    """
    if isinstance(M, MacaulayMatrix):
        reduced, pivots = rref_blocked(M.matrix, M.ring.q)
        polys = _rows_to_polys(M.ring, M.columns, reduced)
    else:
        if q is None:
            raise DegreeError("en ren matris kräver modulen q")
        reduced, pivots = rref_blocked(M, q)
        polys = ()
    return RrefResult(pivot_columns=tuple(pivots), basis_polys=polys, rank=len(pivots), matrix=reduced)


def _covers(pivot_monomials, oracle_lms):
    return all(any(divides(p, lm) for p in pivot_monomials) for lm in oracle_lms)


@dataclass(frozen=True)
class MacaulayResult:
    degree: int
    witness: RrefResult
    dims_per_degree: tuple
    method: str = "mac"

    @property
    def exceeded(self):
        return self.degree is None

    def as_dict(self):
        return {
            "degree": self.degree,
            "exceeded": self.exceeded,
            "matrix_dims_per_degree": [list(entry) for entry in self.dims_per_degree],
        }


def _oracle_lms(F, oracle):
    basis = oracle if oracle is not None else buchberger(F).reduced_basis
    return [g.lm for g in basis]


def _homogeneous_sweep(F, d_max, oracle_lms, method):
    """Blockvis RREF för homogena system, pivåmonomen samlas över graderna."""
    pivots = []
    dims = []
    witness = None
    for d in range(min(F.degrees), d_max + 1):
        block = build_macaulay(F, d, homogeneous=True)
        witness = rref(block)
        dims.append((d, block.shape[0], block.shape[1]))
        pivots.extend(block.columns[c] for c in witness.pivot_columns)
        if _covers(pivots, oracle_lms):
            return MacaulayResult(d, witness, tuple(dims), method)
    return MacaulayResult(None, witness, tuple(dims), method)


def sd_mac(F, d_max, oracle=None):
    """
    Lösningsgraden för XL: minsta d där RREF(M_{≤d}(F)) ger en Gröbnerbas.

    Args:
        F (PolySystem): Systemet
        d_max (int): Högsta grad som prövas
        oracle: Reducerad Gröbnerbas av ⟨F⟩ (beräknas med buchberger annars)

    Returns:
        MacaulayResult: degree är None om d_max inte räckte
    """
    if not isinstance(F, PolySystem):
        F = PolySystem(tuple(F))
    oracle_lms = _oracle_lms(F, oracle)
    if F.is_homogeneous:
        result = _homogeneous_sweep(F, d_max, oracle_lms, "mac")
    else:
        result = None
        dims = []
        witness = None
        for d in range(min(F.degrees), d_max + 1):
            M = build_macaulay(F, d)
            witness = rref(M)
            dims.append((d, M.shape[0], M.shape[1]))
            if _covers([M.columns[c] for c in witness.pivot_columns], oracle_lms):
                result = MacaulayResult(d, witness, tuple(dims), "mac")
                break
        if result is None:
            result = MacaulayResult(None, witness, tuple(dims), "mac")

    if result.exceeded:
        log_action("compute", f"sd_mac överskred d_max = {d_max}", "macaulay")
    else:
        log_action("compute", f"Beräknade sd_mac = {result.degree}", "macaulay")
    return result


def _mutant_degree(F, d, oracle_lms):
    """
    Kör mutantslingan i grad d.

    Returns:
        tuple: (täcker raderna referensbasen, RrefResult, antal rader totalt)
    """
    M = build_macaulay(F, d)
    ring = M.ring
    q = ring.q
    order = ring.order
    columns = M.columns
    index = {m: i for i, m in enumerate(columns)}
    used = {mono_mul(t, F[j].lm) for t, j in M.rows}
    total_rows = M.shape[0]

    reduced, pivots = rref_blocked(M.matrix, q)
    while True:
        polys = _rows_to_polys(ring, columns, reduced)
        witness = RrefResult(tuple(pivots), polys, len(pivots), reduced)
        if _covers([columns[c] for c in pivots], oracle_lms):
            return True, witness, total_rows

        mutants = [p for p in polys if p.degree < d and p.lm not in used]
        if not mutants:
            return False, witness, total_rows
        used.update(p.lm for p in mutants)
        extra = [
            _row_vector(p.mul_term(t), index, len(columns))
            for p in mutants
            for t in monomials_up_to(order, d - p.degree)
        ]
        total_rows += len(extra)
        stacked = np.vstack([reduced] + extra)
        new_reduced, new_pivots = rref_blocked(stacked, q)
        if len(new_pivots) == len(pivots):
            return False, witness, total_rows
        reduced, pivots = new_reduced, new_pivots


def sd_mut(F, d_max, oracle=None):
    """
    Lösningsgraden med mutantstrategin.

    Gäller alltid max.GB.deg ≤ sd_mut ≤ sd_mac eftersom raderna i grad d
    innehåller alla rader i M_{≤d}(F).
    """
    if not isinstance(F, PolySystem):
        F = PolySystem(tuple(F))
    oracle_lms = _oracle_lms(F, oracle)
    if F.is_homogeneous:
        result = _homogeneous_sweep(F, d_max, oracle_lms, "mut")
    else:
        result = None
        dims = []
        witness = None
        for d in range(min(F.degrees), d_max + 1):
            covered, witness, total_rows = _mutant_degree(F, d, oracle_lms)
            dims.append((d, total_rows, len(monomials_up_to(F.ring.order, d))))
            if covered:
                result = MacaulayResult(d, witness, tuple(dims), "mut")
                break
        if result is None:
            result = MacaulayResult(None, witness, tuple(dims), "mut")

    if result.exceeded:
        log_action("compute", f"sd_mut överskred d_max = {d_max}", "macaulay")
    else:
        log_action("compute", f"Beräknade sd_mut = {result.degree}", "macaulay")
    return result
