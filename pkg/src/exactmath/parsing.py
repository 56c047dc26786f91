"""Literal grammars shared by the CLI: sets, relations, complex numbers in
a+bi form, points/vectors, planes and lines.  Rational and matrix literals
live next to their types (rationals.parse_rational, Matrix.from_string).
"""

import re

from .complexn import GaussianRational
from .errors import ParseError
from .geometry import Line, Plane, Vec3
from .rationals import parse_rational
from .relations import Relation
from .sets import FinSet


def _atom(token: str):
    token = token.strip()
    if re.fullmatch(r"[+-]?\d+", token):
        return int(token)
    if re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", token):
        return token
    raise ParseError(f"not a set atom: {token!r}")


def parse_set(text: str) -> FinSet:
    """Parse "{1, 2, 3}" or "{a, b}"; "{}" is the empty set."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ParseError(f"set literal must be brace-delimited: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return FinSet()
    return FinSet(_atom(token) for token in body.split(","))


_PAIR = re.compile(r"\(\s*([^,()]+)\s*,\s*([^,()]+)\s*\)")


def parse_pairs(text: str) -> list[tuple]:
    """Parse "{(1,2),(2,3)}" into a pair list."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ParseError(f"relation literal must be brace-delimited: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return []
    pairs = [( _atom(m.group(1)), _atom(m.group(2)) ) for m in _PAIR.finditer(body)]
    if not pairs:
        raise ParseError(f"no pairs found in {text!r}")
    return pairs


def parse_relation(text: str, source: FinSet | None = None,
                   target: FinSet | None = None) -> Relation:
    """Relation from a pair literal; source/target default to the atoms
    that actually appear."""
    pairs = parse_pairs(text)
    if source is None:
        source = FinSet(a for a, _ in pairs)
    if target is None:
        target = FinSet(b for _, b in pairs)
    return Relation(source, target, pairs)


_TERM_SPLIT = re.compile(r"(?=[+-])")


def parse_complex(text: str) -> GaussianRational:
    """Parse "a+bi" forms: "3+4i", "-i", "2", "1/2-3/4i", "4i"."""
    compact = text.replace(" ", "")
    if not compact:
        raise ParseError("empty complex literal")
    real = imag = None
    for term in (t for t in _TERM_SPLIT.split(compact) if t):
        if term.endswith("i"):
            if imag is not None:
                raise ParseError(f"two imaginary parts in {text!r}")
            body = term[:-1]
            if body in ("", "+"):
                imag = parse_rational("1")
            elif body == "-":
                imag = parse_rational("-1")
            else:
                imag = parse_rational(body)
        else:
            if real is not None:
                raise ParseError(f"two real parts in {text!r}")
            real = parse_rational(term)
    return GaussianRational(real or 0, imag or 0)


def parse_vec3(text: str) -> Vec3:
    """Parse "(x, y, z)"; parentheses optional."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = body.split(",")
    if len(parts) != 3:
        raise ParseError(f"a point/vector needs 3 components: {text!r}")
    return Vec3(*(parse_rational(p) for p in parts))


def parse_plane(text: str) -> Plane:
    """Parse "A B C D" (whitespace-separated rational coefficients)."""
    parts = text.split()
    if len(parts) != 4:
        raise ParseError(f"a plane literal has 4 coefficients: {text!r}")
    return Plane(*(parse_rational(p) for p in parts))


_LINE = re.compile(r"^\s*point\s*=\s*(\([^)]*\))\s+dir\s*=\s*(\([^)]*\))\s*$")
_CANONICAL_PART = re.compile(
    r"^\s*\(\s*([xyz])\s*([+-])\s*((?:\([^()]*\)|[^()])+)\)\s*/\s*(\S+)\s*$"
    r"|^\s*([xyz])\s*/\s*(\S+)\s*$")


def parse_line(text: str) -> Line:
    """Parse "point=(..) dir=(..)" or the canonical string
    "(x-x0)/l=(y-y0)/m=(z-z0)/n" (zero denominators rejected)."""
    m = _LINE.match(text)
    if m:
        return Line(parse_vec3(m.group(1)), parse_vec3(m.group(2)))
    parts = text.split("=")
    if len(parts) != 3:
        raise ParseError(f"not a line literal: {text!r}")
    anchor = {}
    direction = {}
    for part in parts:
        m = _CANONICAL_PART.match(part)
        if m is None:
            raise ParseError(f"bad canonical line fragment: {part!r}")
        if m.group(1):
            var = m.group(1)
            sign = -1 if m.group(2) == "+" else 1
            offset = m.group(3).strip()
            if offset.startswith("(") and offset.endswith(")"):
                offset = offset[1:-1]
            anchor[var] = sign * parse_rational(offset)
            denom = parse_rational(m.group(4))
        else:
            var = m.group(5)
            anchor[var] = 0
            denom = parse_rational(m.group(6))
        if denom == 0:
            raise ParseError("zero denominator; use the parametric form")
        direction[var] = denom
    if set(anchor) != {"x", "y", "z"}:
        raise ParseError(f"a canonical line names x, y and z once each: {text!r}")
    return Line(
        Vec3(anchor["x"], anchor["y"], anchor["z"]),
        Vec3(direction["x"], direction["y"], direction["z"]),
    )
