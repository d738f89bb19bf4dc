"""
Primkroppar, monom och polynom

Grundlagret som alla andra moduler bygger på:

1. Kroppsaritmetik
   - PrimeField kontrollerar att q är ett udda primtal under 2^31
   - FieldElement är ett fryst värde med addition, multiplikation och invers

2. Monom och monomordningar
   - Monom är tupler av exponenter, en plats per variabel, y sist om ringen
     är homogeniserad
   - MonomialOrder ger DRL (x_n ≺ ... ≺ x_1, valfri permutation) och dess
     homogenisering där y är minst

3. Polynom
   - Termerna hålls sorterade strikt fallande under ringens ordning, utan nollor
   - Homogenisering, avhomogenisering, topp-del och linjära variabelbyten

4. Polynomsystem
   - PolySystem bevarar generatorernas ordning (prefix spelar roll)
   - random_system och random_homogeneous_system för undersökningar

Tekniska detaljer:
- Koefficienter lagras som Python-heltal i [0, q)
- Monomordningen ges av en sorteringsnyckel, större nyckel = större monom
- Homogeniserad DRL sammanfaller med DRL på n+1 variabler med y sist
"""

from dataclasses import dataclass, replace
from enum import Enum
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement

import numpy as np
from sympy import isprime

from errors import (AlgebraError, FieldError, RingMismatchError, SingularTransformError,
                    ZeroPolynomialError)
from linalg import rank_mod

MAX_MODULUS = 2 ** 31


@lru_cache(maxsize=None)
def _check_modulus(q):
    if not isinstance(q, (int, np.integer)) or q < 3 or q >= MAX_MODULUS:
        raise FieldError(f"modulen måste vara ett udda primtal under 2^31, fick {q}")
    if not isprime(int(q)):
        raise FieldError(f"{q} är inte ett primtal")


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        _check_modulus(self.q)

    def element(self, value):
        return FieldElement(int(value) % self.q, self)

    def inv(self, value):
        value = int(value) % self.q
        if value == 0:
            raise FieldError("noll saknar invers")
        return pow(value, -1, self.q)


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        object.__setattr__(self, "value", int(self.value) % self.field.q)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("element från olika kroppar")
            return other.value
        return int(other) % self.field.q

    def __add__(self, other):
        return FieldElement(self.value + self._coerce(other), self.field)

    def __sub__(self, other):
        return FieldElement(self.value - self._coerce(other), self.field)

    def __mul__(self, other):
        return FieldElement(self.value * self._coerce(other), self.field)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.field)

    def inverse(self):
        return FieldElement(self.field.inv(self.value), self.field)

    def __truediv__(self, other):
        return self * FieldElement(self._coerce(other), self.field).inverse()

    def __int__(self):
        return self.value


# Monom: tupler av icke-negativa exponenter

def degree(m):
    return sum(m)


def divides(a, b):
    """a | b om varje exponent i a är högst motsvarande exponent i b."""
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_quotient(b, a):
    """b / a, förutsätter att a | b."""
    return tuple(y - x for x, y in zip(a, b))


def coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


class OrderKind(Enum):
    DRL = "drl"
    HOMOGENIZED_DRL = "hdrl"


@dataclass(frozen=True)
class MonomialOrder:
    """
    Graderad omvänd lexikografisk ordning.

    permutation anger variablerna från störst till minst (None betyder
    x_1 ≻ x_2 ≻ ... ≻ x_n). I den homogeniserade ordningen läggs y sist.
    """
    kind: OrderKind
    n: int
    permutation: tuple = None

    @property
    def nvars(self):
        return self.n + 1 if self.kind is OrderKind.HOMOGENIZED_DRL else self.n

    @cached_property
    def _reversed_positions(self):
        positions = list(self.permutation) if self.permutation is not None else list(range(self.n))
        if sorted(positions) != list(range(self.n)):
            raise AlgebraError(f"ogiltig variabelpermutation {self.permutation}")
        if self.kind is OrderKind.HOMOGENIZED_DRL:
            positions.append(self.n)
        return tuple(reversed(positions))

    def key(self, m):
        # Total grad först, sedan minst exponent i den minsta variabeln vinner
        return (sum(m), tuple(-m[i] for i in self._reversed_positions))

    def sorted_desc(self, monomials):
        return sorted(monomials, key=self.key, reverse=True)

    def greater(self, a, b):
        return self.key(a) > self.key(b)


@dataclass(frozen=True)
class PolyRing:
    """
    F_q[x_1, ..., x_n], eventuellt utökad med en homogeniserande variabel y.
    """
    n: int
    q: int
    homogenized: bool = False
    names: tuple = None
    permutation: tuple = None

    def __post_init__(self):
        if self.n < 1:
            raise AlgebraError("ringen behöver minst en variabel")
        _check_modulus(self.q)
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"x{i + 1}" for i in range(self.n)))
        elif len(self.names) != self.n:
            raise AlgebraError("antalet variabelnamn matchar inte n")
        if "y" in self.names:
            raise AlgebraError("variabelnamnet y är reserverat för homogenisering")

    @property
    def nvars(self):
        return self.n + 1 if self.homogenized else self.n

    @property
    def variable_names(self):
        return self.names + ("y",) if self.homogenized else self.names

    @cached_property
    def field(self):
        return PrimeField(self.q)

    @cached_property
    def order(self):
        kind = OrderKind.HOMOGENIZED_DRL if self.homogenized else OrderKind.DRL
        return MonomialOrder(kind, self.n, self.permutation)

    def homogenized_ring(self):
        return replace(self, homogenized=True)

    def affine_ring(self):
        return replace(self, homogenized=False)

    def one_monomial(self):
        return (0,) * self.nvars

    def zero(self):
        return Polynomial(self, ())

    def constant(self, c):
        return Polynomial.from_dict(self, {self.one_monomial(): c})

    def gen(self, i):
        """Variabel nummer i (0-baserat); i = n är y i en homogeniserad ring."""
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, ((tuple(exps), 1),))

    def monomial(self, m, c=1):
        return Polynomial.from_dict(self, {tuple(m): c})


@lru_cache(maxsize=None)
def monomials_of_degree(order, d):
    """Alla monom av total grad d i ordningens variabler, strikt fallande."""
    k = order.nvars
    result = []
    for combo in combinations_with_replacement(range(k), d):
        exps = [0] * k
        for i in combo:
            exps[i] += 1
        result.append(tuple(exps))
    return tuple(order.sorted_desc(result))


def monomials_up_to(order, d):
    """Alla monom av grad ≤ d, strikt fallande (grad d först, monomet 1 sist)."""
    result = []
    for e in range(d, -1, -1):
        result.extend(monomials_of_degree(order, e))
    return result


class Polynomial:
    """
    Polynom över F_q med termer sorterade strikt fallande.

    terms är en tupel av (monom, koefficient) med koefficienter i [1, q).
    Nollpolynomet har inga termer och inget ledande monom.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=()):
        self.ring = ring
        self.terms = tuple(terms)

    @classmethod
    def from_dict(cls, ring, coeffs):
        q = ring.q
        items = [(tuple(m), int(c) % q) for m, c in coeffs.items()]
        items = [(m, c) for m, c in items if c]
        for m, _ in items:
            if len(m) != ring.nvars:
                raise AlgebraError(f"monomet {m} har fel längd för ringen")
        items.sort(key=lambda t: ring.order.key(t[0]), reverse=True)
        return cls(ring, items)

    @classmethod
    def from_terms(cls, ring, terms):
        coeffs = {}
        for m, c in terms:
            m = tuple(m)
            coeffs[m] = coeffs.get(m, 0) + int(c)
        return cls.from_dict(ring, coeffs)

    # Grundläggande egenskaper

    @property
    def is_zero(self):
        return not self.terms

    @property
    def lm(self):
        if not self.terms:
            raise ZeroPolynomialError("nollpolynomet saknar ledande monom")
        return self.terms[0][0]

    @property
    def lc(self):
        if not self.terms:
            raise ZeroPolynomialError("nollpolynomet saknar ledande koefficient")
        return self.terms[0][1]

    @property
    def lt(self):
        return self.lm, self.lc

    @property
    def degree(self):
        """Högsta totala grad, -1 för nollpolynomet."""
        return max((sum(m) for m, _ in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(m) for m, _ in self.terms}) <= 1

    def is_constant(self):
        return all(sum(m) == 0 for m, _ in self.terms)

    def as_dict(self):
        return dict(self.terms)

    def monomials(self):
        return [m for m, _ in self.terms]

    def coefficient(self, m):
        return self.as_dict().get(tuple(m), 0)

    def __len__(self):
        return len(self.terms)

    # Aritmetik

    def _check_ring(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError(f"kan inte kombinera polynom med {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError("polynomen tillhör olika ringar")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check_ring(other)
        coeffs = self.as_dict()
        for m, c in other.terms:
            coeffs[m] = coeffs.get(m, 0) + c
        return Polynomial.from_dict(self.ring, coeffs)

    __radd__ = __add__

    def __neg__(self):
        q = self.ring.q
        return Polynomial(self.ring, tuple((m, q - c) for m, c in self.terms))

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check_ring(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer, FieldElement)):
            return self.scale(int(other))
        self._check_ring(other)
        q = self.ring.q
        coeffs = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                coeffs[m] = (coeffs.get(m, 0) + c1 * c2) % q
        return Polynomial.from_dict(self.ring, coeffs)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise AlgebraError("negativ exponent")
        result = self.ring.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, c):
        q = self.ring.q
        c = int(c) % q
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((m, (v * c) % q) for m, v in self.terms))

    def mul_term(self, m, c=1):
        """Multiplicerar med c·m; ordningen bevaras så ingen omsortering behövs."""
        q = self.ring.q
        c = int(c) % q
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((mono_mul(t, m), (v * c) % q) for t, v in self.terms))

    def monic(self):
        if self.is_zero:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    # Jämförelse och utskrift

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_polynomial(self)


def format_monomial(m, names):
    factors = []
    for name, e in zip(names, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_polynomial(f):
    """Skriver polynomet på infixform med koefficienter i [0, q)."""
    if f.is_zero:
        return "0"
    names = f.ring.variable_names
    parts = []
    for m, c in f.terms:
        mono = format_monomial(m, names)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)


def poly_arith(f, g, op):
    """Addition, subtraktion eller multiplikation av två polynom i samma ring."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise AlgebraError(f"okänd operation {op}")


def homogenize(f):
    """
    f^h = Σ c_t · t · y^(deg f − deg t) i ringen med n+1 variabler.

    Raises:
        ZeroPolynomialError: om f = 0
    """
    if f.is_zero:
        raise ZeroPolynomialError("kan inte homogenisera nollpolynomet")
    if f.ring.homogenized:
        raise AlgebraError("polynomet är redan i en homogeniserad ring")
    d = f.degree
    ring = f.ring.homogenized_ring()
    return Polynomial.from_dict(ring, {m + (d - sum(m),): c for m, c in f.terms})


def dehomogenize(h):
    """h(x_1, ..., x_n, 1) tillbaka i den affina ringen."""
    if not h.ring.homogenized:
        raise AlgebraError("polynomet är inte i en homogeniserad ring")
    coeffs = {}
    for m, c in h.terms:
        key = m[:-1]
        coeffs[key] = coeffs.get(key, 0) + c
    return Polynomial.from_dict(h.ring.affine_ring(), coeffs)


def top_part(f):
    """
    Topp-delen av ett polynom.

    Affint f: summan av termerna med högst total grad (samma ring).
    Homogent h i R[y]: h med y = 0, returnerat i den affina ringen (kan vara noll).
    """
    if f.ring.homogenized:
        ring = f.ring.affine_ring()
        return Polynomial(ring, tuple((m[:-1], c) for m, c in f.terms if m[-1] == 0))
    if f.is_zero:
        raise ZeroPolynomialError("nollpolynomet saknar topp-del")
    d = f.degree
    return Polynomial(f.ring, tuple((m, c) for m, c in f.terms if sum(m) == d))


def apply_linear_transform(f, P):
    """
    h^σ = h(x·P): variabel j ersätts med Σ_i P[i][j]·x_i.

    Args:
        f (Polynomial): Polynomet
        P: k×k-matris (lista av rader eller numpy-array) över F_q, k = antal variabler

    Raises:
        SingularTransformError: om P inte är inverterbar
    """
    ring = f.ring
    k = ring.nvars
    q = ring.q
    matrix = [[int(v) % q for v in row] for row in np.asarray(P).tolist()]
    if len(matrix) != k or any(len(row) != k for row in matrix):
        raise SingularTransformError(f"matrisen måste vara {k}×{k}")
    if rank_mod(np.array(matrix, dtype=np.int64), q) < k:
        raise SingularTransformError("matrisen är singulär över F_q")

    unit = [tuple(1 if i == j else 0 for i in range(k)) for j in range(k)]
    forms = [Polynomial.from_dict(ring, {unit[i]: matrix[i][j] for i in range(k)}) for j in range(k)]
    powers = {}

    def power(j, e):
        if (j, e) not in powers:
            powers[(j, e)] = forms[j] ** e
        return powers[(j, e)]

    result = ring.zero()
    for m, c in f.terms:
        term = ring.constant(c)
        for j, e in enumerate(m):
            if e:
                term = term * power(j, e)
        result = result + term
    return result


def transform_sending_to_last(ell):
    """
    Bygger den övertriangulära matrisen P som skickar linjärformen ℓ till sista variabeln.

    P är identiteten utom sista kolumnen (−a_1/c, ..., −a_{k−1}/c, 1/c) där c är
    ℓ:s koefficient för sista variabeln. För c = 1 blir det den välkända matrisen
    med sista kolumnen (−a_1, ..., −a_{k−1}, 1).
    """
    ring = ell.ring
    k = ring.nvars
    q = ring.q
    if ell.is_zero or not all(sum(m) == 1 for m, _ in ell.terms):
        raise AlgebraError("ℓ måste vara en nollskild linjärform utan konstant term")
    coeffs = [0] * k
    for m, c in ell.terms:
        coeffs[m.index(1)] = c
    last = coeffs[-1]
    if last == 0:
        raise SingularTransformError("ℓ saknar sista variabeln, ingen övertriangulär P finns")
    inverse = ring.field.inv(last)
    matrix = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    for i in range(k - 1):
        matrix[i][k - 1] = (-coeffs[i] * inverse) % q
    matrix[k - 1][k - 1] = inverse
    return matrix


@dataclass(frozen=True)
class PolySystem:
    """
    En ordnad följd F = (f_1, ..., f_m) av icke-konstanta polynom i samma ring.
    """
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise AlgebraError("ett polynomsystem behöver minst en generator")
        ring = gens[0].ring
        for i, f in enumerate(gens, 1):
            if f.ring != ring:
                raise RingMismatchError(f"f_{i} tillhör en annan ring")
            if f.is_zero:
                raise ZeroPolynomialError(f"f_{i} är nollpolynomet")
            if f.is_constant():
                raise AlgebraError(f"f_{i} är konstant")

    @property
    def ring(self):
        return self.generators[0].ring

    @property
    def degrees(self):
        return tuple(f.degree for f in self.generators)

    @property
    def m(self):
        return len(self.generators)

    @property
    def n(self):
        return self.ring.n

    @property
    def is_homogeneous(self):
        return all(f.is_homogeneous() for f in self.generators)

    def homogenize(self):
        return PolySystem(tuple(homogenize(f) for f in self.generators))

    def top(self):
        return PolySystem(tuple(top_part(f) for f in self.generators))

    def prefix(self, i):
        return PolySystem(self.generators[:i])

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, i):
        return self.generators[i]


def _validate_random_parameters(n, degrees, q, min_degree):
    if n < 1:
        raise AlgebraError("n måste vara minst 1")
    if not degrees:
        raise AlgebraError("minst en grad krävs")
    if any(d < min_degree for d in degrees):
        raise AlgebraError(f"alla grader måste vara minst {min_degree}")
    return PolyRing(n, q)


def random_system(n, degrees, q, seed):
    """
    Slumpar ett affint system med nollskild topp-del och konstant term noll.

    Varje f_i får likformigt slumpade koefficienter på alla monom av grad
    1..d_i. Grad-d_i-delen slumpas om tills den är nollskild, så deg f_i = d_i.
    Samma frö ger alltid samma system.
    """
    ring = _validate_random_parameters(n, degrees, q, 2)
    rng = np.random.default_rng(seed)
    generators = []
    for d in degrees:
        coeffs = {}
        for e in range(1, d):
            monos = monomials_of_degree(ring.order, e)
            values = rng.integers(0, q, size=len(monos))
            coeffs.update({m: int(v) for m, v in zip(monos, values)})
        top_monos = monomials_of_degree(ring.order, d)
        values = rng.integers(0, q, size=len(top_monos))
        while not values.any():
            values = rng.integers(0, q, size=len(top_monos))
        coeffs.update({m: int(v) for m, v in zip(top_monos, values)})
        generators.append(Polynomial.from_dict(ring, coeffs))
    return PolySystem(tuple(generators))


def random_homogeneous_system(n, degrees, q, seed):
    """Slumpar ett homogent system, varje f_i nollskilt av grad exakt d_i."""
    ring = _validate_random_parameters(n, degrees, q, 1)
    rng = np.random.default_rng(seed)
    generators = []
    for d in degrees:
        monos = monomials_of_degree(ring.order, d)
        values = rng.integers(0, q, size=len(monos))
        while not values.any():
            values = rng.integers(0, q, size=len(monos))
        generators.append(Polynomial.from_dict(ring, {m: int(v) for m, v in zip(monos, values)}))
    return PolySystem(tuple(generators))
