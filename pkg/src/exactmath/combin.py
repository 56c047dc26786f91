"""Combinatorics: factorials, binomial coefficients, binomial expansions with
rational coefficients/exponents, and the closed-form sum formulas from the
induction chapter.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfDomain, UnknownKind


def factorial(n: int) -> int:
    if n < 0:
        raise OutOfDomain(f"factorial requires n >= 0, got {n}")
    result = 1
    for k in range(2, n + 1):
        result *= k
    return result


def binom(n: int, k: int) -> int:
    """Binomial coefficient by the multiplicative formula.

    Each intermediate division is exact (Pascal's rule guarantees
    integrality), so no big factorials are formed.
    """
    if n < 0 or not 0 <= k <= n:
        raise OutOfDomain(f"binom requires 0 <= k <= n, got n={n}, k={k}")
    k = min(k, n - k)
    result = 1
    for i in range(k):
        result = result * (n - i) // (i + 1)
    return result


@dataclass(frozen=True, order=True)
class Monomial:
    """A single term coeff * x^exponent with rational coeff and exponent."""

    exponent: Fraction
    coeff: Fraction

    def __str__(self):
        return f"{self.coeff}*x^{self.exponent}"


def binom_term(n: int, k: int, c1: Fraction, e1: Fraction,
               c2: Fraction, e2: Fraction) -> Monomial:
    """Term T_{k+1} of (c1*x^e1 + c2*x^e2)^n, k = 0..n."""
    if not 0 <= k <= n:
        raise OutOfDomain(f"term index requires 0 <= k <= n, got n={n}, k={k}")
    coeff = binom(n, k) * c1 ** (n - k) * c2 ** k
    exponent = e1 * (n - k) + e2 * k
    return Monomial(Fraction(exponent), Fraction(coeff))


def binom_expand(n: int, c1: Fraction, e1: Fraction,
                 c2: Fraction, e2: Fraction) -> list[Monomial]:
    """Full expansion of (c1*x^e1 + c2*x^e2)^n, n >= 1.

    Terms come back sorted by ascending exponent with like exponents merged
    and zero coefficients dropped.
    """
    if n < 1:
        raise OutOfDomain(f"expansion requires n >= 1, got {n}")
    if c1 == 0 or c2 == 0:
        raise OutOfDomain("expansion requires nonzero coefficients")
    merged: dict[Fraction, Fraction] = {}
    for k in range(n + 1):
        term = binom_term(n, k, c1, e1, c2, e2)
        merged[term.exponent] = merged.get(term.exponent, Fraction(0)) + term.coeff
    return [Monomial(e, c) for e, c in sorted(merged.items()) if c != 0]


# Closed forms proved by induction in the text; the loop oracle lives in the
# test suite.
_CLOSED_FORMS = {
    "first_n": lambda n: Fraction(n * (n + 1), 2),
    "odd": lambda n: Fraction(n * n),
    "triangular": lambda n: Fraction(n * (n + 1) * (n + 2), 6),
    "squares": lambda n: Fraction(n * (n + 1) * (2 * n + 1), 6),
    "recip_consecutive": lambda n: Fraction(n, n + 1),
    "recip_odd": lambda n: Fraction(n, 2 * n + 1),
    "product_consecutive": lambda n: Fraction(n * (n + 1) * (n + 2), 3),
}


def closed_form_sum(kind: str, n: int) -> Fraction:
    """Closed-form value of one of the induction-chapter sums.

    Kinds: first_n (1+2+...+n), odd (1+3+...+(2n-1)), triangular
    (1+3+6+...+n(n+1)/2), squares (1^2+...+n^2), recip_consecutive
    (sum 1/(k(k+1))), recip_odd (sum 1/((2k-1)(2k+1))),
    product_consecutive (1*2+2*3+...+n(n+1)).
    """
    if kind not in _CLOSED_FORMS:
        raise UnknownKind(f"unknown sum kind {kind!r}")
    if n < 1:
        raise OutOfDomain(f"sum requires n >= 1, got {n}")
    return _CLOSED_FORMS[kind](n)


def sum_kinds() -> tuple[str, ...]:
    return tuple(_CLOSED_FORMS)
