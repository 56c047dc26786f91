"""Propositional logic: formula trees, a recursive-descent parser, truth
tables, and tautology/contradiction/contingency classification.

Concrete syntax (precedence high to low, '->' right-associative, the rest
left-associative):

    ! ~        negation
    &          conjunction
    |          disjunction
    ^          exclusive disjunction
    ->         implication
    <->        equivalence

Atoms match [a-z][a-z0-9]*; parentheses override precedence.
"""

import re
from dataclasses import dataclass
from enum import Enum

from .errors import ParseError, TooManyAtoms, UnboundAtom

MAX_ATOMS = 20


class Formula:
    """Base class for formula nodes; all subclasses are frozen dataclasses."""

    def atoms(self) -> list[str]:
        """Atom names in first-occurrence order."""
        seen: list[str] = []

        def walk(f):
            if isinstance(f, Atom):
                if f.name not in seen:
                    seen.append(f.name)
            elif isinstance(f, Not):
                walk(f.operand)
            else:
                walk(f.left)
                walk(f.right)

        walk(self)
        return seen


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Xor(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


class Classification(Enum):
    TAUTOLOGY = "tautology"
    CONTRADICTION = "contradiction"
    CONTINGENT = "contingent"


_TOKEN = re.compile(r"\s*(<->|->|[!~&|^()]|[a-z][a-z0-9]*)")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", position=pos)
            break
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index][0]
        return None

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, token: str):
        if self.peek() != token:
            raise ParseError(f"expected {token!r}", position=self._position())
        self.advance()

    def _position(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index][1]
        return len(self.text)

    # formula := iff ; iff := imp ("<->" imp)*
    def parse(self) -> Formula:
        f = self.iff()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r}", position=self._position())
        return f

    def iff(self) -> Formula:
        f = self.imp()
        while self.peek() == "<->":
            self.advance()
            f = Iff(f, self.imp())
        return f

    def imp(self) -> Formula:  # right-associative
        f = self.xor()
        if self.peek() == "->":
            self.advance()
            return Implies(f, self.imp())
        return f

    def xor(self) -> Formula:
        f = self.disj()
        while self.peek() == "^":
            self.advance()
            f = Xor(f, self.disj())
        return f

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek() == "|":
            self.advance()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.advance()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        token = self.peek()
        if token in ("!", "~"):
            self.advance()
            return Not(self.unary())
        if token == "(":
            self.advance()
            f = self.iff()
            self.expect(")")
            return f
        if token is None:
            raise ParseError("unexpected end of input", position=self._position())
        if re.fullmatch(r"[a-z][a-z0-9]*", token):
            self.advance()
            return Atom(token)
        raise ParseError(f"unexpected token {token!r}", position=self._position())


def parse_formula(text: str) -> Formula:
    if not text.strip():
        raise ParseError("empty formula")
    return _Parser(text).parse()


_PRECEDENCE = {Iff: 1, Implies: 2, Xor: 3, Or: 4, And: 5, Not: 6, Atom: 7}


def print_formula(f: Formula) -> str:
    """Render with minimal parentheses; parse(print(f)) == f."""

    def render(node, parent_prec, right_side=False):
        prec = _PRECEDENCE[type(node)]
        if isinstance(node, Atom):
            text = node.name
        elif isinstance(node, Not):
            text = "!" + render(node.operand, prec)
        else:
            symbol = {And: "&", Or: "|", Xor: "^", Implies: "->", Iff: "<->"}[type(node)]
            # left-assoc chains keep the left child at equal precedence;
            # implication is right-associative so the mirror rule applies
            if isinstance(node, Implies):
                left = render(node.left, prec + 1)
                right = render(node.right, prec)
            else:
                left = render(node.left, prec)
                right = render(node.right, prec + 1)
            text = f"{left} {symbol} {right}"
        if prec < parent_prec:
            return f"({text})"
        return text

    return render(f, 0)


def evaluate(f: Formula, assignment: dict[str, bool]) -> bool:
    """Evaluate under a total assignment of the formula's atoms."""
    if isinstance(f, Atom):
        try:
            return assignment[f.name]
        except KeyError:
            raise UnboundAtom(f"no value for atom {f.name!r}") from None
    if isinstance(f, Not):
        return not evaluate(f.operand, assignment)
    left = evaluate(f.left, assignment)
    right = evaluate(f.right, assignment)
    if isinstance(f, And):
        return left and right
    if isinstance(f, Or):
        return left or right
    if isinstance(f, Xor):
        return left != right
    if isinstance(f, Implies):
        return (not left) or right
    return left == right  # Iff


@dataclass(frozen=True)
class TruthTable:
    atoms: tuple[str, ...]
    rows: tuple[tuple[tuple[bool, ...], bool], ...]

    def __str__(self):
        header = " ".join(self.atoms) + " | *"
        lines = [header, "-" * len(header)]
        for values, result in self.rows:
            cells = " ".join("T" if v else "F" for v in values)
            lines.append(f"{cells} | {'T' if result else 'F'}")
        return "\n".join(lines)


def truth_table(f: Formula) -> TruthTable:
    """All 2^n assignments, first atom varying slowest, T before F."""
    atoms = f.atoms()
    if len(atoms) > MAX_ATOMS:
        raise TooManyAtoms(f"{len(atoms)} atoms exceeds the cap of {MAX_ATOMS}")
    rows = []
    for mask in range(2 ** len(atoms)):
        # bit 0 of the row index drives the last atom; T (True) comes first
        values = tuple(
            not (mask >> (len(atoms) - 1 - i)) & 1 for i in range(len(atoms))
        )
        rows.append((values, evaluate(f, dict(zip(atoms, values)))))
    return TruthTable(tuple(atoms), tuple(rows))


def classify(f: Formula) -> Classification:
    table = truth_table(f)
    results = [result for _, result in table.rows]
    if all(results):
        return Classification.TAUTOLOGY
    if not any(results):
        return Classification.CONTRADICTION
    return Classification.CONTINGENT


def equivalent(f: Formula, g: Formula) -> bool:
    return classify(Iff(f, g)) is Classification.TAUTOLOGY
