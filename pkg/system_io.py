"""
In- och utläsning av polynomsystem

Textformat:

    ring q=73 vars=x1,x2,x3
    x1^2 + 3*x1*x2 + x2^2 - 2*x1*x3 - x1 - 2*x2 + x3
    4*x1^2 + 3*x1*x2 + ...

Första raden anger primtalet och variablerna, därefter ett polynom per rad.
Tomma rader och rader som börjar med # hoppas över. Konstanter och
nollrader avvisas.

JSON-spegeln har formen
{"q": 73, "vars": ["x1", ...], "polynomials": [[[exponenter], koefficient], ...]}.

Tekniska detaljer:
- Infix-uttryck tolkas med sympy (^ översätts till **)
- Rationella koefficienter a/b reduceras till a·b^(-1) mod q
"""

import json
import re

import sympy
from sympy.parsing.sympy_parser import parse_expr, standard_transformations

from errors import AlgebraError, ParseError
from field_poly import PolyRing, Polynomial, PolySystem, format_polynomial

HEADER = re.compile(r"^\s*ring\s+q\s*=\s*(\d+)\s+vars\s*=\s*([A-Za-z_][\w]*(?:\s*,\s*[A-Za-z_][\w]*)*)\s*$")


def parse_header(line, line_number=1):
    match = HEADER.match(line)
    if not match:
        raise ParseError("förväntade 'ring q=<primtal> vars=x1,...,xn'", line_number)
    q = int(match.group(1))
    names = tuple(name.strip() for name in match.group(2).split(","))
    if len(set(names)) != len(names):
        raise ParseError("variabelnamnen måste vara unika", line_number)
    # Ett avslutande y är den homogeniserande variabeln
    homogenized = len(names) > 1 and names[-1] == "y"
    if homogenized:
        names = names[:-1]
    try:
        return PolyRing(len(names), q, homogenized=homogenized, names=names)
    except AlgebraError as e:
        raise ParseError(str(e), line_number) from e


def parse_polynomial(text, ring, line_number=None):
    """Tolkar ett infix-uttryck till ett polynom i ringen."""
    symbols = {name: sympy.Symbol(name) for name in ring.variable_names}
    try:
        expr = parse_expr(text.replace("^", "**"), local_dict=symbols,
                          transformations=standard_transformations, evaluate=True)
        poly = sympy.Poly(expr, *[symbols[name] for name in ring.variable_names], domain=sympy.QQ)
    except Exception as e:
        raise ParseError(f"kan inte tolka '{text.strip()}': {e}", line_number) from e

    q = ring.q
    coeffs = {}
    for exps, c in poly.terms():
        c = sympy.Rational(c)
        numerator, denominator = int(c.p), int(c.q)
        if denominator % q == 0:
            raise ParseError(f"nämnaren {denominator} är delbar med {q}", line_number)
        coeffs[tuple(int(e) for e in exps)] = numerator * pow(denominator, -1, q)
    return Polynomial.from_dict(ring, coeffs)


def parse_system(text):
    """
    Läser ett system i textformatet.

    Returns:
        PolySystem: Systemet i den angivna ringen

    Raises:
        ParseError: med radnummer vid fel
    """
    ring = None
    generators = []
    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ring is None:
            ring = parse_header(line, line_number)
            continue
        f = parse_polynomial(line, ring, line_number)
        if f.is_zero:
            raise ParseError("polynomet är noll", line_number)
        if f.is_constant():
            raise ParseError("polynomet är konstant", line_number)
        generators.append(f)

    if ring is None:
        raise ParseError("rubrikraden saknas")
    if not generators:
        raise ParseError("systemet innehåller inga polynom")
    return PolySystem(tuple(generators))


def format_system(system):
    """Skriver systemet i textformatet (läsbart av parse_system)."""
    ring = system.ring
    lines = [f"ring q={ring.q} vars={','.join(ring.variable_names)}"]
    lines.extend(format_polynomial(f) for f in system)
    return "\n".join(lines) + "\n"


def system_to_json(system):
    ring = system.ring
    return {
        "q": ring.q,
        "vars": list(ring.names),
        "homogenized": ring.homogenized,
        "polynomials": [[[list(m), c] for m, c in f.terms] for f in system],
    }


def system_from_json(data):
    """Läser JSON-spegeln (dict eller sträng)."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        ring = PolyRing(len(data["vars"]), int(data["q"]), homogenized=bool(data.get("homogenized", False)),
                        names=tuple(data["vars"]))
        generators = [Polynomial.from_terms(ring, [(tuple(m), c) for m, c in terms])
                      for terms in data["polynomials"]]
    except (KeyError, TypeError) as e:
        raise ParseError(f"ogiltig JSON för polynomsystem: {e}") from e
    for i, f in enumerate(generators, 1):
        if f.is_zero or f.is_constant():
            raise ParseError(f"polynom {i} är noll eller konstant")
    return PolySystem(tuple(generators))


def read_system(path):
    """Läser ett system från fil; .json tolkas som JSON-spegeln."""
    with open(path, encoding="utf-8") as handle:
        content = handle.read()
    if str(path).endswith(".json"):
        return system_from_json(content)
    return parse_system(content)
