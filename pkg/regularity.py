"""
Regularitetsklassificering och verifieringar

Den här modulen avgör vilka regularitetsbegrepp ett system uppfyller och kör
de strukturella kontrollerna på homogeniseringen F^h:

1. Klassificering
   - is_d_regular / regular_up_to: HF jämförs med ∏(1−z^{d_j})/(1−z)^k
   - classify: kryptografisk semiregularitet för F^top (D = d_reg),
     semiregularitet prefix för prefix, generaliserad CSR för F^h (D′)
     samt svag omvänd lexikografi för LM-idealen

2. Koszul-kontroll
   - koszul_h1_dim: dim syz, dim tsyz och dim H_1 i grad d via rang över F_q
   - koszul_oracle_disagreements: jämför d-regularitet med H_1 = 0 i grad < d

3. Verifieringar (returnerar VerdictRecord, kastar aldrig vid misslyckad kontroll)
   - verify_homogenized_hilbert: HF-rekursionen, unimodalitet, y-multiplikation,
     seriekongruensen och D′ = D − 1 när m = n
   - verify_lm_correspondence: LM-lagren under D, täckning av grad D och
     enterms-toppar i grad D

Tekniska detaljer:
- "Föregår" i svag omvänd lexikografi tolkas som "strikt större i ordningen"
- Analysen av ett system cachas, så klassificering och verifieringar delar
  samma Gröbnerbaser
- Koszul-matriser större än syzygy_entry_cap hoppas över
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from errors import DegreeError, SyzygyCapExceeded
from field_poly import (
    PolySystem,
    divides,
    mono_mul,
    monomials_of_degree,
    top_part,
)
from groebner import buchberger, normal_form
from hilbert import INFINITY, degree_to_json, hilbert_function, lm_ideal, regularity_degrees
from linalg import rank_mod
from series_bounds import product_series, semiregular_series
from settings import DEFAULT_SETTINGS
from views.custom_logging import log_action

PRECEDES_READING = "strictly_greater"


@dataclass(frozen=True)
class SystemAnalysis:
    system: PolySystem
    trace: object
    top_trace: object
    hom_trace: object
    top_summary: object
    hom_summary: object

    @property
    def top_system(self):
        return self.system.top()

    @property
    def hom_system(self):
        return self.system.homogenize()

    @property
    def D(self):
        return self.top_summary.d_reg

    @property
    def D_prime(self):
        return self.hom_summary.gen_d_reg


@lru_cache(maxsize=32)
def analyze_system(F, strategy="normal"):
    """
    Beräknar G, G_top och G_hom samt Hilbertdata för F^top och F^h.

    Args:
        F (PolySystem): Affint system
        strategy (str): Parvalsstrategi för buchberger

    Returns:
        SystemAnalysis: Allt som klassificering och verifieringar behöver
    """
    if F.ring.homogenized:
        raise DegreeError("analysen kräver ett system i den affina ringen")
    trace = buchberger(F, strategy)
    top_trace = buchberger(F.top(), strategy)
    hom_trace = buchberger(F.homogenize(), strategy)
    return SystemAnalysis(
        system=F,
        trace=trace,
        top_trace=top_trace,
        hom_trace=hom_trace,
        top_summary=regularity_degrees(lm_ideal(top_trace.reduced_basis)),
        hom_summary=regularity_degrees(lm_ideal(hom_trace.reduced_basis)),
    )


def _homogeneous(F):
    if not isinstance(F, PolySystem):
        F = PolySystem(tuple(F))
    if not F.is_homogeneous:
        raise DegreeError("systemet måste vara homogent")
    return F


def regular_up_to(F, cap, basis=None):
    """
    Största d ≤ cap sådant att F är d-reguljärt.

    Första graden t där HF_{R/⟨F⟩}(t) avviker från seriens koefficient ger
    svaret t; ingen avvikelse under cap ger cap.
    """
    F = _homogeneous(F)
    if cap <= 0:
        return max(cap, 0)
    basis = basis if basis is not None else buchberger(F).reduced_basis
    J = lm_ideal(basis)
    expected = product_series(F.ring.nvars, F.degrees, cap - 1)
    for t in range(cap):
        if hilbert_function(J, t) != expected.coefficient(t):
            return t
    return cap


def is_d_regular(F, d, basis=None):
    """Sant om HF(t) = [z^t] ∏(1−z^{d_j})/(1−z)^k för alla t < d."""
    return regular_up_to(F, d, basis) >= d


def is_weakly_revlex(J, order):
    """
    Sant om varje monom av samma grad som är strikt större än en minimal
    generator också ligger i J.
    """
    for u in J.generators:
        key = order.key(u)
        for m in monomials_of_degree(order, sum(u)):
            if order.key(m) <= key:
                break
            if not J.contains(m):
                return False
    return True


def _is_semiregular(top, n, top_basis):
    """Prefix för prefix: HF för ⟨f_1..f_i⟩ mot [∏_{j≤i}(1−z^{d_j})/(1−z)^n]."""
    for i in range(1, top.m + 1):
        prefix = top.prefix(i)
        basis = top_basis if i == top.m else buchberger(prefix).reduced_basis
        J = lm_ideal(basis)
        cap = sum(prefix.degrees) + 1
        expected = semiregular_series(n, prefix.degrees, cap=cap)
        if any(hilbert_function(J, t) != expected.coefficient(t) for t in range(cap + 1)):
            return False
    return True


@dataclass(frozen=True)
class RegularityReport:
    is_d_regular_up_to: int
    is_crypto_semiregular: bool
    is_semiregular: bool
    is_generalized_csr: bool
    D: object
    D_prime: object
    wrl_hom: bool
    wrl_top: bool
    precedes: str = PRECEDES_READING

    def as_dict(self):
        return {
            "is_d_regular_up_to": self.is_d_regular_up_to,
            "is_crypto_semiregular": self.is_crypto_semiregular,
            "is_semiregular": self.is_semiregular,
            "is_generalized_csr": self.is_generalized_csr,
            "D": degree_to_json(self.D),
            "D_prime": degree_to_json(self.D_prime),
            "wrl_hom": self.wrl_hom,
            "wrl_top": self.wrl_top,
            "precedes": self.precedes,
        }


def classify(F, analysis=None):
    """
    Klassificerar ett affint system via F^top och F^h.

    Funktionen:
    1. D = d_reg(⟨F^top⟩); F^top är kryptografiskt semireguljärt om det är D-reguljärt
    2. Semiregularitet kontrolleras prefix för prefix, varje prefix med egen bas
    3. D′ = gen_d_reg(⟨F^h⟩); generaliserad CSR om F^h är D′-reguljärt
    4. Svag omvänd lexikografi för ⟨LM(G_hom)⟩ och ⟨LM(G_top)⟩

    Returns:
        RegularityReport: Samtliga flaggor och grader
    """
    analysis = analysis or analyze_system(F)
    top = F.top()
    top_basis = analysis.top_trace.reduced_basis
    hom_basis = analysis.hom_trace.reduced_basis
    D = analysis.D
    D_prime = analysis.D_prime

    cap = D if D is not INFINITY else sum(F.degrees) + 1
    up_to = regular_up_to(top, cap, top_basis)
    crypto = D is not INFINITY and up_to >= D
    semiregular = crypto and _is_semiregular(top, F.n, top_basis)
    gcsr = D_prime is not INFINITY and is_d_regular(F.homogenize(), D_prime, hom_basis)

    report = RegularityReport(
        is_d_regular_up_to=up_to,
        is_crypto_semiregular=crypto,
        is_semiregular=semiregular,
        is_generalized_csr=gcsr,
        D=D,
        D_prime=D_prime,
        wrl_hom=is_weakly_revlex(lm_ideal(hom_basis), hom_basis[0].ring.order),
        wrl_top=is_weakly_revlex(lm_ideal(top_basis), top_basis[0].ring.order),
    )
    log_action("compute", f"Klassificerade system: D = {D}, D′ = {D_prime}, CSR = {crypto}, "
                          f"generaliserad CSR = {gcsr}", "regularity")
    return report


@dataclass(frozen=True)
class SyzygySlice:
    degree: int
    dim_syz: int
    dim_tsyz: int

    @property
    def dim_h1(self):
        return self.dim_syz - self.dim_tsyz


def koszul_h1_dim(F, d, cap=None):
    """
    dim H_1 = dim syz − dim tsyz i grad d.

    Kolumnerna i φ₁ är par (u, j) med deg u + d_j = d och raderna är
    monomen av grad d. De triviala syzygierna u·(f_i e_j − f_j e_i) spänner tsyz.

    Raises:
        SyzygyCapExceeded: om någon matris har fler element än cap
    """
    F = _homogeneous(F)
    cap = DEFAULT_SETTINGS.syzygy_entry_cap if cap is None else cap
    ring = F.ring
    order = ring.order
    q = ring.q

    row_monos = monomials_of_degree(order, d)
    row_index = {m: i for i, m in enumerate(row_monos)}
    columns = [(u, j) for j, f in enumerate(F) if d >= f.degree
               for u in monomials_of_degree(order, d - f.degree)]
    col_index = {c: i for i, c in enumerate(columns)}
    if len(row_monos) * len(columns) > cap:
        raise SyzygyCapExceeded(f"φ₁ i grad {d} har {len(row_monos) * len(columns)} element")
    if not columns:
        return SyzygySlice(d, 0, 0)

    phi = np.zeros((len(row_monos), len(columns)), dtype=np.int64)
    for c, (u, j) in enumerate(columns):
        for m, v in F[j].terms:
            phi[row_index[mono_mul(u, m)], c] = v
    dim_syz = len(columns) - rank_mod(phi, q)

    trivial = []
    for j in range(F.m):
        for i in range(j):
            slack = d - F[i].degree - F[j].degree
            if slack < 0:
                continue
            for u in monomials_of_degree(order, slack):
                vector = np.zeros(len(columns), dtype=np.int64)
                for m, v in F[i].terms:
                    vector[col_index[(mono_mul(u, m), j)]] += v
                for m, v in F[j].terms:
                    vector[col_index[(mono_mul(u, m), i)]] -= v
                trivial.append(vector % q)
    if len(trivial) * len(columns) > cap:
        raise SyzygyCapExceeded(f"tsyz i grad {d} har {len(trivial) * len(columns)} element")
    dim_tsyz = rank_mod(np.vstack(trivial), q) if trivial else 0
    return SyzygySlice(d, dim_syz, dim_tsyz)


def koszul_oracle_disagreements(F, d_max, cap=None):
    """
    Grader d ≤ d_max där is_d_regular(F, d) och "H_1 = 0 i alla grader < d" skiljer sig.

    Returns:
        list eller None: None om Koszul-matrisen överskrider taket
    """
    F = _homogeneous(F)
    basis = buchberger(F).reduced_basis
    try:
        h1_zero = [koszul_h1_dim(F, t, cap).dim_h1 == 0 for t in range(d_max)]
    except SyzygyCapExceeded as e:
        log_action("skip", f"Hoppade över Koszul-kontroll: {e}", "regularity")
        return None
    up_to = regular_up_to(F, d_max, basis)
    disagreements = [d for d in range(1, d_max + 1) if (up_to >= d) != all(h1_zero[:d])]
    if disagreements:
        log_action("violation", f"Brott mot Koszul-ekvivalensen i grad {disagreements}", "regularity")
    return disagreements


@dataclass(frozen=True)
class VerdictRecord:
    name: str
    status: str
    checks: dict = field(default_factory=dict)
    details: tuple = ()

    @property
    def passed(self):
        return self.status == "pass"

    def as_dict(self):
        return {"name": self.name, "status": self.status, "checks": dict(self.checks),
                "details": list(self.details)}


def _verdict(name, checks, details):
    status = "pass" if all(checks.values()) else "fail"
    if status == "pass":
        log_action("verify", f"{name}: alla {len(checks)} kontroller gick igenom", "regularity")
    else:
        failed = [key for key, ok in checks.items() if not ok]
        log_action("violation", f"Brott mot {name}: {', '.join(failed)}", "regularity")
    return VerdictRecord(name, status, checks, tuple(details))


def _skipped(name, reason):
    log_action("skip", f"Hoppade över {name}: {reason}", "regularity")
    return VerdictRecord(name, "skipped", {}, (reason,))


def _standard_basis(J, order, d):
    return [m for m in monomials_of_degree(order, d) if not J.contains(m)]


def _y_multiplication_rank(hom_basis, J, order, d):
    """Rang av multiplikation med y från (R′/I)_{d−1} till (R′/I)_d."""
    source = _standard_basis(J, order, d - 1)
    target = _standard_basis(J, order, d)
    if not source or not target:
        return 0, len(source), len(target)
    ring = hom_basis[0].ring
    index = {m: i for i, m in enumerate(target)}
    y = (0,) * ring.n + (1,)
    matrix = np.zeros((len(source), len(target)), dtype=np.int64)
    for r, b in enumerate(source):
        image = normal_form(ring.monomial(mono_mul(b, y)), hom_basis)
        for m, c in image.terms:
            matrix[r, index[m]] = c
    return rank_mod(matrix, ring.q), len(source), len(target)


def verify_homogenized_hilbert(F, analysis=None):
    """
    Kontrollerar hur Hilbertfunktionen för R′/⟨F^h⟩ bestäms av F^top.

    Funktionen:
    1. HF_h(d) = HF_top(d) + HF_h(d−1) och HF_h(d) = Σ_{i≤d} HF_top(i) för d < D
    2. HF_h växer till och med D−1 och avtar därefter
    3. y-multiplikation (d−1 → d) är injektiv för d < D och surjektiv för d ≥ D
    4. HS_h ≡ ∏(1−z^{d_i})/(1−z)^{n+1} mod z^D
    5. När m = n: D′ = D − 1

    Hoppas över om ⟨F^top⟩ inte är Artinskt eller F^top inte är CSR.
    """
    name = "homogenized_hilbert"
    if F.ring.homogenized:
        return _skipped(name, "systemet är redan homogeniserat")
    analysis = analysis or analyze_system(F)
    report = classify(F, analysis)
    if not analysis.top_summary.artinian or not report.is_crypto_semiregular:
        return _skipped(name, "F^top är inte kryptografiskt semireguljärt")

    D = analysis.D
    D_prime = analysis.D_prime
    J_top = lm_ideal(analysis.top_trace.reduced_basis)
    hom_basis = analysis.hom_trace.reduced_basis
    J_hom = lm_ideal(hom_basis)
    order = hom_basis[0].ring.order
    last = max(D, D_prime if D_prime is not INFINITY else D) + 2
    hf_top = [hilbert_function(J_top, d) for d in range(last + 1)]
    hf_hom = [hilbert_function(J_hom, d) for d in range(last + 1)]

    checks = {}
    details = []
    checks["recursion"] = all(hf_hom[d] == hf_top[d] + (hf_hom[d - 1] if d else 0) for d in range(D))
    checks["cumulative"] = all(hf_hom[d] == sum(hf_top[:d + 1]) for d in range(D))

    peak = hf_hom[D - 1]
    rising = all(hf_hom[d] <= hf_hom[d + 1] for d in range(D - 1))
    falling = all(hf_hom[d] >= hf_hom[d + 1] for d in range(D - 1, last))
    checks["unimodal"] = rising and falling and peak == max(hf_hom)

    injective = True
    surjective = True
    for d in range(1, last + 1):
        rank, rows, cols = _y_multiplication_rank(hom_basis, J_hom, order, d)
        if d < D and rank != rows:
            injective = False
            details.append(f"y·: grad {d - 1} → {d} är inte injektiv (rang {rank} < {rows})")
        if d >= D and rank != cols:
            surjective = False
            details.append(f"y·: grad {d - 1} → {d} är inte surjektiv (rang {rank} < {cols})")
    checks["y_injective"] = injective
    checks["y_surjective"] = surjective

    expected = product_series(F.n + 1, F.degrees, D - 1)
    checks["series_congruence"] = all(hf_hom[t] == expected.coefficient(t) for t in range(D))
    if F.m == F.n:
        checks["m_equals_n"] = D_prime is not INFINITY and D_prime == D - 1

    details.append(f"HF_top = {hf_top}, HF_h = {hf_hom}, D = {D}, D′ = {D_prime}")
    return _verdict(name, checks, details)


def verify_lm_correspondence(F, analysis=None):
    """
    Jämför ledmonomen i G_hom och G_top.

    - LM(G_hom)_d = LM(G_top)_d för d < D (kräver CSR)
    - Varje monom av grad D utan y delas av något LM i (G_hom)_{≤D}
    - g ∈ (G_hom)_D med nollskild topp-del har topp-delen LT(g)
    """
    name = "lm_correspondence"
    if F.ring.homogenized:
        return _skipped(name, "systemet är redan homogeniserat")
    analysis = analysis or analyze_system(F)
    D = analysis.D
    if D is INFINITY:
        return _skipped(name, "⟨F^top⟩ är inte Artinskt")
    report = classify(F, analysis)
    hom_basis = analysis.hom_trace.reduced_basis
    top_basis = analysis.top_trace.reduced_basis

    checks = {}
    details = []
    if report.is_crypto_semiregular:
        equal = True
        for d in range(D):
            hom_lms = {g.lm for g in hom_basis if g.degree == d}
            top_lms = {g.lm + (0,) for g in top_basis if g.degree == d}
            if hom_lms != top_lms:
                equal = False
                details.append(f"LM-lagren skiljer sig i grad {d}")
        checks["lm_slices"] = equal
    else:
        details.append("LM-lagren jämfördes inte: F^top är inte kryptografiskt semireguljärt")

    low_lms = [g.lm for g in hom_basis if g.degree <= D]
    affine_order = top_basis[0].ring.order
    uncovered = [m for m in monomials_of_degree(affine_order, D)
                 if not any(divides(lm, m + (0,)) for lm in low_lms)]
    checks["degree_d_cover"] = not uncovered
    if uncovered:
        details.append(f"{len(uncovered)} monom av grad {D} täcks inte")

    single = True
    for g in hom_basis:
        if g.degree != D:
            continue
        top = top_part(g)
        if top.is_zero:
            continue
        if len(top) != 1 or top.terms[0] != (g.lm[:-1], g.lc):
            single = False
            details.append(f"topp-delen av {g} är inte LT(g)")
    checks["single_term_tops"] = single
    return _verdict(name, checks, details)
