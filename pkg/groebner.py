"""
Gröbnerbaser med Buchbergers algoritm

Den här modulen beräknar reducerade Gröbnerbaser över F_q och samlar in
gradstatistik under körningen:

1. Grundoperationer
   - spoly: S-polynomet t_1·f − t_2·g där ledande termer tar ut varandra
   - normal_form: fullständig division, reducerare prövas i insättningsordning
   - interreduce: minimal, monisk och svansreducerad bas
   - is_groebner: Buchbergers kriterium, alla S-polynom reduceras till noll

2. buchberger
   - Parkö med heapq, Buchbergers första kriterium (relativt prima LM hoppas över)
   - Strategi "normal": minsta grad på LCM, sedan LCM i ordningen, sedan ålder
   - Strategi "sugar": sugar-grad först, därefter som "normal"
   - tie_break "oldest" eller "newest" avgör ordningen mellan lika par

3. saturation_exponent
   - S_0 = största minsta s sådant att y^s·g^h ∈ ⟨F^h⟩ för g i DRL-basen av ⟨F⟩

Tekniska detaljer:
- Stegrad = graden av LCM för det valda paret
- Strikt grad = graden av S-polynomet efter att ledande termer tagits ut
- Båda golvas av största indatagraden (inga par betyder inga steg)
- Ordningen kommer från ringen: DRL, eller homogeniserad DRL med y sist
"""

import heapq
from dataclasses import dataclass

from errors import AlgebraError, RingMismatchError, ZeroPolynomialError
from field_poly import (
    Polynomial,
    PolySystem,
    coprime,
    divides,
    homogenize,
    mono_lcm,
    mono_mul,
    mono_quotient,
)
from views.custom_logging import log_action

STRATEGIES = ("normal", "sugar")
TIE_BREAKS = ("oldest", "newest")


def _generators(F):
    gens = list(F.generators) if isinstance(F, PolySystem) else list(F)
    if not gens:
        raise AlgebraError("indata måste innehålla minst ett polynom")
    return gens


def spoly(f, g):
    """
    S-polynomet av f och g.

    Returns:
        Polynomial: t_1·f − t_2·g med t_i·LM = LCM(LM(f), LM(g))

    Raises:
        ZeroPolynomialError: om f eller g är noll
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("S-polynomet är odefinierat för nollpolynomet")
    if f.ring != g.ring:
        raise RingMismatchError("polynomen tillhör olika ringar")
    lcm = mono_lcm(f.lm, g.lm)
    field = f.ring.field
    left = f.mul_term(mono_quotient(lcm, f.lm), field.inv(f.lc))
    right = g.mul_term(mono_quotient(lcm, g.lm), field.inv(g.lc))
    return left - right


def _reduce(f, G, sugar=None, sugars=None):
    """Fullständig reduktion av f med G, returnerar (rest, sugar)."""
    ring = f.ring
    q = ring.q
    key = ring.order.key
    reducers = [(g.lm, ring.field.inv(g.lc), g.terms[1:], i) for i, g in enumerate(G) if not g.is_zero]
    work = f.as_dict()
    remainder = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, inverse, tail, index in reducers:
            if divides(lm, m):
                t = mono_quotient(m, lm)
                factor = (c * inverse) % q
                for u, v in tail:
                    u = mono_mul(u, t)
                    value = (work.get(u, 0) - factor * v) % q
                    if value:
                        work[u] = value
                    else:
                        work.pop(u, None)
                if sugar is not None:
                    sugar = max(sugar, sum(t) + sugars[index])
                break
        else:
            remainder[m] = c
    return Polynomial.from_dict(ring, remainder), sugar


def normal_form(f, G):
    """
    Resten av f vid division med G.

    Ingen term i resten är delbar med något LM(g). Den första g (i G:s
    ordning) vars LM delar den aktuella termen används alltid.
    """
    G = list(G)
    if not G:
        raise AlgebraError("reduktion kräver minst ett polynom")
    remainder, _ = _reduce(f, G)
    return remainder


def _minimalize(G):
    result = []
    for g in sorted(G, key=lambda h: h.ring.order.key(h.lm)):
        if all(not divides(h.lm, g.lm) for h in result):
            result.append(g)
    return result


def interreduce(G):
    """
    Gör en Gröbnerbas till den reducerade Gröbnerbasen.

    Funktionen:
    1. Tar bort nollpolynom och gör alla element moniska
    2. Behåller bara element vars LM inte är delbart med ett annat LM
    3. Reducerar varje svans mot de övriga elementen

    Returns:
        list: Basen sorterad fallande efter ledande monom
    """
    G = [g.monic() for g in G if not g.is_zero]
    if not G:
        return []
    minimal = _minimalize(G)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(normal_form(g, others).monic() if others else g)
    order = reduced[0].ring.order
    return sorted(reduced, key=lambda h: order.key(h.lm), reverse=True)


def is_groebner(G):
    """Sant om alla S-polynom i G reduceras till noll modulo G."""
    G = [g for g in G if not g.is_zero]
    if not G:
        raise AlgebraError("is_groebner kräver minst ett nollskilt polynom")
    for j in range(len(G)):
        for i in range(j):
            if not normal_form(spoly(G[i], G[j]), G).is_zero:
                return False
    return True


@dataclass(frozen=True)
class GroebnerTrace:
    reduced_basis: tuple
    step_degrees: tuple
    spoly_degrees: tuple
    max_gb_degree: int
    sd_step: int
    sd_strict: int
    zero_reductions: int
    strategy: str = "normal"

    @property
    def leading_monomials(self):
        return tuple(g.lm for g in self.reduced_basis)

    def telemetry(self):
        return {
            "step_degrees": list(self.step_degrees),
            "sd_step": self.sd_step,
            "sd_strict": self.sd_strict,
            "max_gb_degree": self.max_gb_degree,
            "zero_reductions": self.zero_reductions,
        }


def buchberger(F, strategy="normal", tie_break="oldest"):
    """
    Beräknar den reducerade Gröbnerbasen av ⟨F⟩ i ringens ordning.

    Funktionen:
    1. Gör indata moniska och bildar alla par som inte stryks av första kriteriet
    2. Väljer par ur kön enligt strategin och reducerar S-polynomet
    3. En nollskild rest läggs till basen och får nya par
    4. Slutresultatet interreduceras

    Args:
        F (PolySystem eller sekvens av Polynomial): Generatorer
        strategy (str): "normal" eller "sugar"
        tie_break (str): "oldest" (äldsta paret först) eller "newest"

    Returns:
        GroebnerTrace: Bas och gradstatistik
    """
    if strategy not in STRATEGIES:
        raise AlgebraError(f"okänd strategi '{strategy}', välj bland {STRATEGIES}")
    if tie_break not in TIE_BREAKS:
        raise AlgebraError(f"okänd tie_break '{tie_break}', välj bland {TIE_BREAKS}")

    gens = [f for f in _generators(F) if not f.is_zero]
    if not gens:
        raise ZeroPolynomialError("alla generatorer är noll")
    ring = gens[0].ring
    order = ring.order
    input_degree = max(f.degree for f in gens)

    basis = []
    sugars = []
    queue = []
    counter = 0

    def pair_key(i, j):
        lcm = mono_lcm(basis[i].lm, basis[j].lm)
        age = (j, i) if tie_break == "oldest" else (-j, -i)
        head = (sum(lcm), order.key(lcm), age)
        if strategy == "sugar":
            sugar = max(sugars[i] + sum(lcm) - basis[i].degree, sugars[j] + sum(lcm) - basis[j].degree)
            return (sugar,) + head
        return head

    def add(f, sugar):
        nonlocal counter
        basis.append(f.monic())
        sugars.append(sugar)
        j = len(basis) - 1
        for i in range(j):
            # Första kriteriet: relativt prima LM ger alltid rest noll
            if coprime(basis[i].lm, basis[j].lm):
                continue
            heapq.heappush(queue, (pair_key(i, j), counter, i, j))
            counter += 1

    for f in gens:
        add(f, f.degree)

    step_degrees = []
    spoly_degrees = []
    zero_reductions = 0
    while queue:
        _, _, i, j = heapq.heappop(queue)
        lcm = mono_lcm(basis[i].lm, basis[j].lm)
        step_degrees.append(sum(lcm))
        s = spoly(basis[i], basis[j])
        if s.is_zero:
            zero_reductions += 1
            continue
        spoly_degrees.append(s.degree)
        pair_sugar = max(sugars[i] + sum(lcm) - basis[i].degree, sugars[j] + sum(lcm) - basis[j].degree)
        r, sugar = _reduce(s, basis, pair_sugar, sugars)
        if r.is_zero:
            zero_reductions += 1
            continue
        add(r, max(sugar, r.degree))

    reduced = tuple(interreduce(basis))
    max_gb_degree = max(g.degree for g in reduced)
    trace = GroebnerTrace(
        reduced_basis=reduced,
        step_degrees=tuple(step_degrees),
        spoly_degrees=tuple(spoly_degrees),
        max_gb_degree=max_gb_degree,
        sd_step=max(step_degrees + [input_degree]),
        sd_strict=max(spoly_degrees + [input_degree]),
        zero_reductions=zero_reductions,
        strategy=strategy,
    )
    log_action("compute", f"Beräknade reducerad Gröbnerbas: {len(reduced)} element, max grad {max_gb_degree}",
               "groebner")
    return trace


@dataclass(frozen=True)
class SaturationResult:
    s0: int
    saturation_basis: tuple
    exponents: tuple = ()


def saturation_exponent(F, basis=None, hom_basis=None, step_cap=64):
    """
    Mättnadsexponenten S_0 för (⟨F^h⟩ : y^∞) = ⟨F⟩^h.

    Args:
        F (PolySystem): Affint system
        basis: Färdig reducerad DRL-bas av ⟨F⟩ (beräknas annars)
        hom_basis: Färdig Gröbnerbas av ⟨F^h⟩ (beräknas annars)
        step_cap (int): Högsta exponent som prövas innan felet rapporteras

    Returns:
        SaturationResult: S_0, basen G^h av ⟨F⟩^h och exponenten per element
    """
    if not isinstance(F, PolySystem):
        F = PolySystem(tuple(F))
    if F.ring.homogenized:
        raise AlgebraError("mättnadsexponenten kräver ett affint system")
    G = list(basis) if basis is not None else list(buchberger(F).reduced_basis)
    G_hom = list(hom_basis) if hom_basis is not None else list(buchberger(F.homogenize()).reduced_basis)
    saturation = tuple(homogenize(g) for g in G)

    ring = saturation[0].ring
    y = (0,) * ring.n + (1,)
    exponents = []
    for g in saturation:
        s = 0
        p = g
        while not normal_form(p, G_hom).is_zero:
            s += 1
            if s > step_cap:
                raise AlgebraError(f"y^s·g ligger inte i ⟨F^h⟩ för s ≤ {step_cap}")
            p = p.mul_term(y)
        exponents.append(s)

    s0 = max(exponents)
    log_action("compute", f"Beräknade mättnadsexponent S_0 = {s0}", "groebner")
    return SaturationResult(s0=s0, saturation_basis=saturation, exponents=tuple(exponents))
