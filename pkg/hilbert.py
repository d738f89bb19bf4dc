"""
Hilbertfunktioner, Hilbertserier och regularitetsgrader

Allt räknas på ledmonomidealet J = ⟨LM(G)⟩ för en reducerad Gröbnerbas G,
eftersom R/I och R/J har samma Hilbertfunktion.

1. MonomialIdeal
   - Minimala generatorer (ingen delar en annan), medlemskap via delbarhet

2. hilbert_function
   - Räknar monom av grad d som inte ligger i J

3. hilbert_series
   - Täljaren N(z) med HS = N(z)/(1−z)^k, k = antal variabler
   - Pivotrekursion: N(J) = N(J + ⟨x^e⟩) + z^e·N(J : x^e)
   - Basfall: bara rena potenser ger ∏(1 − z^a), 1 ∈ J ger 0

4. regularity_degrees
   - Förkortar (1−z) så länge täljaren har rot i z = 1
   - Ingen nämnare kvar: Artinsk, d_reg = gen_d_reg = deg h + 1
   - En faktor kvar: nolldimensionell, d_reg = ∞, gen_d_reg = deg h, N = h(1)
   - Fler faktorer: båda graderna är ∞

Tekniska detaljer:
- ∞ är ett enum-värde (INFINITY), aldrig ett magiskt heltal
- Pivotvariabeln är den vanligaste variabeln bland de icke-rena generatorerna,
  exponenten är den minsta positiva exponenten för den variabeln
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from errors import AlgebraError, DegreeError
from field_poly import MonomialOrder, OrderKind, divides, monomials_of_degree
from series_bounds import TruncatedSeries
from views.custom_logging import log_action


class Infinity(Enum):
    INFINITY = "∞"

    def __str__(self):
        return self.value


INFINITY = Infinity.INFINITY


def degree_to_json(value):
    """Gradvärden i JSON: heltal, eller strängen "infinity"."""
    return "infinity" if value is INFINITY else value


class MonomialIdeal:
    """Monomideal givet av sina minimala generatorer."""

    def __init__(self, generators, nvars):
        self.nvars = nvars
        gens = sorted({tuple(m) for m in generators}, key=lambda m: (sum(m), m))
        for m in gens:
            if len(m) != nvars:
                raise AlgebraError(f"monomet {m} har fel antal variabler")
        minimal = []
        for m in gens:
            if not any(divides(g, m) for g in minimal):
                minimal.append(m)
        self.generators = tuple(minimal)

    def contains(self, m):
        return any(divides(g, m) for g in self.generators)

    __contains__ = contains

    def generators_of_degree(self, d):
        return tuple(g for g in self.generators if sum(g) == d)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and set(self.generators) == set(other.generators)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.generators)))

    def __repr__(self):
        return f"MonomialIdeal({list(self.generators)})"


def lm_ideal(G):
    """⟨LM(g) : g ∈ G⟩ för en reducerad Gröbnerbas G."""
    G = [g for g in G if not g.is_zero]
    if not G:
        raise AlgebraError("ledmonomidealet kräver minst ett nollskilt polynom")
    return MonomialIdeal([g.lm for g in G], G[0].ring.nvars)


def _all_monomials(nvars, d):
    return monomials_of_degree(MonomialOrder(OrderKind.DRL, nvars), d)


def hilbert_function(J, d):
    """Antalet monom av grad d utanför J, dvs. dim (R/I)_d."""
    if d < 0:
        raise DegreeError("graden måste vara icke-negativ")
    return sum(1 for m in _all_monomials(J.nvars, d) if not J.contains(m))


# Heltalspolynom som listor av koefficienter, index = grad

def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _add(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _minimal(gens):
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    result = []
    for m in gens:
        if not any(divides(g, m) for g in result):
            result.append(m)
    return tuple(result)


def _is_pure(m):
    return sum(1 for e in m if e) == 1


@lru_cache(maxsize=4096)
def _numerator(gens, nvars):
    if not gens:
        return (1,)
    if any(sum(m) == 0 for m in gens):
        return (0,)
    mixed = [m for m in gens if not _is_pure(m)]
    if not mixed:
        result = [1]
        for m in gens:
            a = sum(m)
            result = _mul(result, [1] + [0] * (a - 1) + [-1])
        return tuple(result)

    counts = [sum(1 for m in mixed if m[v]) for v in range(nvars)]
    v = max(range(nvars), key=lambda i: (counts[i], -i))
    e = min(m[v] for m in mixed if m[v])
    power = tuple(e if i == v else 0 for i in range(nvars))

    with_power = _minimal(gens + (power,))
    colon = _minimal(tuple(tuple(max(0, x - e) if i == v else x for i, x in enumerate(m)) for m in gens))
    shifted = [0] * e + list(_numerator(colon, nvars))
    return tuple(_add(list(_numerator(with_power, nvars)), shifted))


def hilbert_series(J, cross_check_cap=None):
    """
    Täljaren N(z) i HS_{R/J}(z) = N(z)/(1−z)^k.

    Args:
        J (MonomialIdeal): Idealet
        cross_check_cap (int, optional): Jämför serieutvecklingen med
            hilbert_function för alla d ≤ cap

    Returns:
        tuple: Heltalskoefficienter, index = grad
    """
    numerator = _numerator(_minimal(J.generators), J.nvars)
    if cross_check_cap is not None:
        expanded = TruncatedSeries(numerator[:cross_check_cap + 1]).truncated(cross_check_cap)
        expanded = expanded.divide_by_one_minus_z(J.nvars)
        for d in range(cross_check_cap + 1):
            if expanded.coefficient(d) != hilbert_function(J, d):
                raise AlgebraError(f"Hilbertserien stämmer inte med uppräkningen i grad {d}")
    return numerator


@dataclass(frozen=True)
class HilbertSummary:
    hf: tuple
    hs_numerator: tuple
    k: int
    d_reg: object
    gen_d_reg: object
    hilbert_poly_constant: int
    artinian: bool
    zero_dimensional: bool

    def as_dict(self):
        return {
            "hf": list(self.hf),
            "numerator": list(self.hs_numerator),
            "k": self.k,
            "d_reg": degree_to_json(self.d_reg),
            "gen_d_reg": degree_to_json(self.gen_d_reg),
            "N": self.hilbert_poly_constant,
            "artinian": self.artinian,
            "zero_dimensional": self.zero_dimensional,
        }


def _divide_one_minus_z(h):
    """h/(1−z) för h med h(1) = 0."""
    out = []
    running = 0
    for c in h[:-1]:
        running += c
        out.append(running)
    return _trim(out or [0])


def regularity_degrees(J, cap=None):
    """
    Sammanfattar Hilbertdata för R/J.

    Funktionen:
    1. Beräknar täljaren och förkortar (1−z) så långt det går
    2. Avgör Artinsk, nolldimensionell eller högre dimension av antalet
       kvarvarande nämnarfaktorer
    3. Beräknar HF(0..cap) ur den förkortade serien

    Args:
        J (MonomialIdeal): Ledmonomidealet
        cap (int, optional): Sista grad i HF-tabellen (standard deg h + 2)

    Returns:
        HilbertSummary: HF, täljare, d_reg, gen_d_reg och N
    """
    h = list(hilbert_series(J))
    k = J.nvars
    if h == [0]:
        # 1 ∈ J: kvoten är nollringen
        cap = 0 if cap is None else cap
        return HilbertSummary((0,) * (cap + 1), (0,), 0, 0, 0, 0, True, False)

    while k > 0 and sum(h) == 0:
        h = _divide_one_minus_z(h)
        k -= 1

    deg_h = len(h) - 1
    cap = deg_h + 2 if cap is None else cap
    padded = TruncatedSeries(tuple(h[:cap + 1])).truncated(cap)
    hf = padded.divide_by_one_minus_z(k).coeffs

    if k == 0:
        d_reg = deg_h + 1
        summary = HilbertSummary(hf, tuple(h), k, d_reg, d_reg, 0, True, False)
    elif k == 1:
        summary = HilbertSummary(hf, tuple(h), k, INFINITY, deg_h, sum(h), False, True)
    else:
        summary = HilbertSummary(hf, tuple(h), k, INFINITY, INFINITY, None, False, False)

    log_action("compute", f"Beräknade Hilbertserie: k = {k}, d_reg = {summary.d_reg}, "
                          f"gen_d_reg = {summary.gen_d_reg}", "hilbert")
    return summary
