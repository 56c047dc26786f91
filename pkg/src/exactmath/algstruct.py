"""Finite binary operations: Cayley tables, algebraic-law checks, and
classification along the chain magma -> semigroup -> monoid -> group ->
abelian group.

The carrier keeps the order it was given in, so printed tables match the
text's row/column convention.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import CarrierMismatch, TooLarge

MAX_CARRIER = 64


class StructureClass(Enum):
    MAGMA = "magma"
    SEMIGROUP = "semigroup"
    MONOID = "monoid"
    GROUP = "group"
    ABELIAN_GROUP = "abelian_group"


@dataclass(frozen=True)
class Magma:
    """A carrier with a |S| x |S| operation table in carrier order.

    Entries outside the carrier are kept as-is and flagged via ``closed``.
    """

    carrier: tuple
    table: tuple  # tuple of rows, row i holds carrier[i] op carrier[j]

    def __post_init__(self):
        n = len(self.carrier)
        if len(set(self.carrier)) != n:
            raise CarrierMismatch("carrier elements must be distinct")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise CarrierMismatch("table shape must match the carrier")

    @property
    def closed(self) -> bool:
        members = set(self.carrier)
        return all(entry in members for row in self.table for entry in row)

    def apply(self, a, b):
        return self.table[self.carrier.index(a)][self.carrier.index(b)]

    def __str__(self):
        cells = [["*"] + [str(c) for c in self.carrier]]
        for c, row in zip(self.carrier, self.table):
            cells.append([str(c)] + [str(entry) for entry in row])
        widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
        lines = []
        for i, row in enumerate(cells):
            line = " | ".join(cell.rjust(w) for cell, w in zip(row, widths))
            lines.append(line)
            if i == 0:
                lines.append("-" * len(line))
        return "\n".join(lines)


def cayley_table(carrier, op) -> Magma:
    """Tabulate a binary operation over an ordered carrier (size <= 64)."""
    carrier = tuple(carrier)
    if len(carrier) > MAX_CARRIER:
        raise TooLarge(f"carrier of {len(carrier)} elements exceeds {MAX_CARRIER}")
    table = tuple(tuple(op(a, b) for b in carrier) for a in carrier)
    return Magma(carrier, table)


def mod_add_table(n: int) -> Magma:
    """Cayley table of ({0..n-1}, +_n)."""
    return cayley_table(range(n), lambda a, b: (a + b) % n)


def mod_mul_table(n: int) -> Magma:
    """Cayley table of ({0..n-1}, *_n)."""
    return cayley_table(range(n), lambda a, b: (a * b) % n)


def classify_structure(m: Magma) -> dict:
    """Law checks by brute force and the resulting structure class.

    Associativity costs |S|^3 table lookups; the carrier cap keeps that
    cheap.  The neutral element, when reported, is unique (checked), and in
    a group every inverse is unique and two-sided.
    """
    closed = m.closed
    result = {
        "closed": closed,
        "associative": False,
        "commutative": False,
        "neutral": None,
        "all_invertible": False,
        "class": StructureClass.MAGMA,
    }
    if not closed:
        return result

    elements = m.carrier
    op = m.apply
    result["associative"] = all(
        op(op(a, b), c) == op(a, op(b, c))
        for a in elements for b in elements for c in elements
    )
    result["commutative"] = all(
        op(a, b) == op(b, a) for a in elements for b in elements
    )
    neutrals = [e for e in elements
                if all(op(a, e) == a and op(e, a) == a for a in elements)]
    assert len(neutrals) <= 1, "two distinct neutral elements"
    if neutrals:
        result["neutral"] = neutrals[0]
        e = neutrals[0]
        result["all_invertible"] = all(
            any(op(a, x) == e and op(x, a) == e for x in elements)
            for a in elements
        )

    if result["associative"]:
        if result["neutral"] is not None:
            if result["all_invertible"]:
                result["class"] = (StructureClass.ABELIAN_GROUP
                                   if result["commutative"]
                                   else StructureClass.GROUP)
            else:
                result["class"] = StructureClass.MONOID
        else:
            result["class"] = StructureClass.SEMIGROUP
    return result


def inverses(m: Magma) -> dict:
    """Map each element to its (unique) two-sided inverse, if the structure
    has a neutral element."""
    info = classify_structure(m)
    e = info["neutral"]
    if e is None:
        return {}
    table = {}
    for a in m.carrier:
        for x in m.carrier:
            if m.apply(a, x) == e and m.apply(x, a) == e:
                table[a] = x
                break
    return table


def check_distributive(m1: Magma, m2: Magma) -> bool:
    """Is the second operation distributive over the first, both sides?"""
    if m1.carrier != m2.carrier:
        raise CarrierMismatch("distributivity needs a shared carrier")
    add, mul = m1.apply, m2.apply
    return all(
        mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
        and mul(add(b, c), a) == add(mul(b, a), mul(c, a))
        for a in m1.carrier for b in m1.carrier for c in m1.carrier
    )
