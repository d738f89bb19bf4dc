"""
Trunkerade potensserier och gradgränser

Den här modulen räknar exakt med heltalsserier och utvärderar alla slutna
gradgränser som används för att uppskatta lösningsgraden:

1. TruncatedSeries
   - Koefficienter c_0..c_cap, exakt heltalsaritmetik
   - Division med (1−z)^k som upprepade prefixsummor
   - Koefficienter utanför ±2^127 ger SeriesOverflowError i stället för tyst fel

2. Semireguljära serier
   - bracket_truncate: behåll prefixet till sista sammanhängande positiva koefficient
   - semiregular_series: [∏(1−z^{d_i})/(1−z)^n]
   - homogenized_series: samma sak över n+1 variabler

3. Gränser
   - d_reg_formula och d_new (grad av trunkerad serie + 1)
   - lazard_bound: summan av de ℓ = min(m, n+1) största graderna − ℓ + 1
   - degree_sum_bound: d_1+...+d_n+d_m−n (stigande ordning) och den förfinade
     varianten med d_{n+1} när d_m ≤ ⌊(d_1+...+d_{n+1}−n−1)/2⌋+1
   - complexity_estimate: kostnadsuttrycken för radreduktion av Macaulaymatriser

Tekniska detaljer:
- Standardtak för serier är lazard_bound + 2, vilket räcker för alla formler
- Graderna sorteras inne i varje formel enligt formelns egen konvention
- ω är en fri parameter, potensen beräknas med sympy och avrundas
"""

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb

import sympy

from errors import BoundError, SeriesOverflowError
from views.custom_logging import log_action

COEFFICIENT_LIMIT = 2 ** 127


def _checked(coeffs):
    coeffs = tuple(coeffs)
    for c in coeffs:
        if abs(c) >= COEFFICIENT_LIMIT:
            raise SeriesOverflowError(f"seriekoefficient {c} ryms inte i 128 bitar")
    return coeffs


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _checked(int(c) for c in self.coeffs))

    @property
    def cap(self):
        return len(self.coeffs) - 1

    @property
    def degree(self):
        """Index för sista nollskilda koefficient, −1 för nollserien."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def coefficient(self, t):
        return self.coeffs[t] if 0 <= t < len(self.coeffs) else 0

    def __add__(self, other):
        length = min(len(self.coeffs), len(other.coeffs))
        return TruncatedSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(length)))

    def __sub__(self, other):
        length = min(len(self.coeffs), len(other.coeffs))
        return TruncatedSeries(tuple(self.coeffs[i] - other.coeffs[i] for i in range(length)))

    def __mul__(self, other):
        length = min(len(self.coeffs), len(other.coeffs))
        out = [0] * length
        for i, a in enumerate(self.coeffs[:length]):
            if a:
                for j in range(length - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(tuple(out))

    def divide_by_one_minus_z(self, k=1):
        coeffs = list(self.coeffs)
        for _ in range(k):
            running = 0
            for i, c in enumerate(coeffs):
                running += c
                coeffs[i] = running
            _checked(coeffs)
        return TruncatedSeries(tuple(coeffs))

    def truncated(self, cap):
        coeffs = self.coeffs[:cap + 1]
        return TruncatedSeries(coeffs + (0,) * (cap + 1 - len(coeffs)))

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}" if i == 0 else f"{c}*z^{i}" if i > 1 else f"{c}*z")
        return " + ".join(parts) if parts else "0"


def product_series(k, degrees, cap):
    """∏(1−z^{d_i}) / (1−z)^k utvecklad till och med graden cap."""
    coeffs = [0] * (cap + 1)
    coeffs[0] = 1
    for d in degrees:
        # Multiplicera med (1 − z^d) bakifrån
        for i in range(cap, d - 1, -1):
            coeffs[i] -= coeffs[i - d]
    return TruncatedSeries(tuple(coeffs)).divide_by_one_minus_z(k)


def bracket_truncate(s):
    """
    [s]: behåller c_0..c_k där k är största index med c_0..c_k alla positiva.

    Högre koefficienter nollställs, längden (taket) bevaras.
    """
    k = -1
    for c in s.coeffs:
        if c <= 0:
            break
        k += 1
    return TruncatedSeries(s.coeffs[:k + 1] + (0,) * (len(s.coeffs) - k - 1))


def _truncation_degree(s):
    """Graden av [s], eller None om serien är positiv ända upp till taket."""
    truncated = bracket_truncate(s)
    degree = truncated.degree
    if degree == s.cap:
        return None
    return degree


def default_cap(n, degrees):
    if not degrees:
        return n + 2
    return lazard_bound(n, degrees, warn=False) + 2


def semiregular_series(n, degrees, cap=None):
    """
    [∏(1−z^{d_i})/(1−z)^n], beräknad exakt upp till cap.

    Med m = 0 blir det hela polynomringens serie C(n−1+d, d).
    """
    if n < 1 or any(d < 1 for d in degrees):
        raise BoundError("n och alla grader måste vara minst 1")
    cap = default_cap(n, degrees) if cap is None else cap
    return bracket_truncate(product_series(n, degrees, cap))


def homogenized_series(n, degrees, cap=None):
    """[∏(1−z^{d_i})/(1−z)^{n+1}], serien bakom D_new."""
    if n < 1 or any(d < 1 for d in degrees):
        raise BoundError("n och alla grader måste vara minst 1")
    cap = default_cap(n, degrees) if cap is None else cap
    return bracket_truncate(product_series(n + 1, degrees, cap))


def _formula_degree(k, n, degrees):
    cap = max(default_cap(n, degrees), sum(degrees) + 2)
    degree = _truncation_degree(product_series(k, degrees, cap))
    if degree is None:
        raise BoundError(f"serien över {k} variabler trunkeras aldrig för grader {tuple(degrees)}")
    return degree + 1


def d_reg_formula(n, degrees):
    """deg([∏(1−z^{d_i})/(1−z)^n]) + 1, D för semireguljära system."""
    return _formula_degree(n, n, degrees)


def d_new(n, degrees):
    """
    deg([∏(1−z^{d_i})/(1−z)^{n+1}]) + 1.

    För m = n är serien över n+1 variabler aldrig ändlig; då returneras
    D = Σ(d_i − 1) + 1, som i det fallet begränsar maxgraden för F^h.
    """
    m = len(degrees)
    if m < n:
        raise BoundError(f"D_new kräver m ≥ n, fick m = {m}, n = {n}")
    if m == n:
        return d_reg_formula(n, degrees)
    return _formula_degree(n + 1, n, degrees)


def lazard_bound(n, degrees, warn=True):
    """Summan av de ℓ = min(m, n+1) största graderna, minus ℓ, plus 1."""
    m = len(degrees)
    if warn and m < n:
        log_action("warning", f"Lazards gräns med m = {m} < n = {n}: förutsättningen är inte uppfylld",
                   "series")
    ell = min(m, n + 1)
    top = sorted(degrees, reverse=True)[:ell]
    return sum(top) - ell + 1


def degree_sum_bound(n, degrees):
    """
    (huvudgräns, förfinad gräns eller None) för m > n.

    Graderna sorteras stigande: huvudgränsen är d_1+...+d_n+d_m−n. Den
    förfinade d_1+...+d_n+d_{n+1}−n gäller när d_m ≤ D_1 med
    D_1 = ⌊(d_1+...+d_{n+1}−n−1)/2⌋+1.
    """
    m = len(degrees)
    if m <= n:
        raise BoundError(f"gränsen kräver m > n, fick m = {m}, n = {n}")
    d = sorted(degrees)
    head = sum(d[:n])
    main = head + d[-1] - n
    d1 = (sum(d[:n + 1]) - n - 1) // 2 + 1
    refined = head + d[n] - n if d[-1] <= d1 else None
    return main, refined


@dataclass(frozen=True)
class ComplexityEstimate:
    full: int
    without_zero_reductions: int
    per_degree: int


def _rounded_power(base, omega):
    exponent = sympy.Rational(omega.numerator, omega.denominator)
    digits = len(str(base)) * 4 + 30
    value = sympy.N(sympy.Integer(base) ** exponent, digits)
    return int(sympy.floor(value + sympy.Rational(1, 2)))


def complexity_estimate(n, m, D, omega):
    """
    Utvärderar kostnadsuttrycken för att nå lösningsgrad D.

    full = m·C(n+D,D)^ω + C(n+D,D)²·C(n+D−1,D−1)²·C(n+2D−2,2D−2)
    without_zero_reductions tar bort faktorn C(n+D,D)² i andra termen,
    per_degree = m·D·C(n+D−1,D)^ω (homogen radreduktion grad för grad).

    Args:
        omega: Exponent för matrismultiplikation, 2 ≤ ω ≤ 3 (float, str eller Fraction)
    """
    if D < 1:
        raise BoundError("D måste vara minst 1")
    omega_value = Fraction(str(omega)) if isinstance(omega, float) else Fraction(omega)
    if not 2 <= omega_value <= 3:
        raise BoundError(f"ω måste ligga i [2, 3], fick {omega}")
    columns = comb(n + D, D)
    tail = comb(n + D - 1, D - 1) ** 2 * comb(n + 2 * D - 2, 2 * D - 2)
    elimination = m * _rounded_power(columns, omega_value)
    return ComplexityEstimate(
        full=elimination + columns ** 2 * tail,
        without_zero_reductions=elimination + tail,
        per_degree=m * D * _rounded_power(comb(n + D - 1, D), omega_value),
    )


@dataclass(frozen=True)
class BoundReport:
    lazard: int
    degree_sum_main: int
    degree_sum_refined: int
    d_reg_formula: int
    d_new: int
    two_d_minus_1: int
    two_d_minus_2: int
    d_plus_s0: int = None

    def as_dict(self):
        return asdict(self)


def bound_report(n, degrees, s0=None):
    """
    Samlar alla gränser för (n, grader).

    Gränser vars förutsättning inte håller (t.ex. m ≤ n för degree_sum_bound)
    blir None. d_new ≤ lazard kontrolleras och ett brott ger BoundError.
    """
    m = len(degrees)
    lazard = lazard_bound(n, degrees)
    main, refined = degree_sum_bound(n, degrees) if m > n else (None, None)
    D = d_reg_formula(n, degrees) if m >= n else None
    new = d_new(n, degrees) if m >= n else None
    if new is not None and new > lazard:
        raise BoundError(f"D_new = {new} överstiger Lazards gräns {lazard}")
    return BoundReport(
        lazard=lazard,
        degree_sum_main=main,
        degree_sum_refined=refined,
        d_reg_formula=D,
        d_new=new,
        two_d_minus_1=2 * D - 1 if D is not None else None,
        two_d_minus_2=2 * D - 2 if D is not None else None,
        d_plus_s0=D + s0 if D is not None and s0 is not None else None,
    )
