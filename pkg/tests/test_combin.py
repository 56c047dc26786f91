from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from exactmath import (
    Monomial,
    binom,
    binom_expand,
    binom_term,
    closed_form_sum,
    divides,
    factorial,
    sum_kinds,
)
from exactmath.errors import OutOfDomain, UnknownKind

F = Fraction


def test_factorial():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(10) == 3628800
    with pytest.raises(OutOfDomain):
        factorial(-1)


def test_binom_values():
    assert binom(7, 2) == 21
    assert binom(12, 4) == 495
    assert binom(5, 0) == 1
    assert binom(5, 5) == 1
    with pytest.raises(OutOfDomain):
        binom(5, 7)


@given(st.integers(0, 60), st.integers(0, 60))
def test_binom_identities(n, k):
    if k <= n:
        assert binom(n, k) == binom(n, n - k)
        assert binom(n, k) == factorial(n) // (factorial(k) * factorial(n - k))
    if 1 <= k < n:
        # Pascal's rule
        assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)


@given(st.integers(0, 40))
def test_binom_row_sum(n):
    assert sum(binom(n, k) for k in range(n + 1)) == 2**n


def test_expand_3_plus_2x_pow4():
    terms = binom_expand(4, F(3), F(0), F(2), F(1))
    assert terms == [
        Monomial(F(0), F(81)),
        Monomial(F(1), F(216)),
        Monomial(F(2), F(216)),
        Monomial(F(3), F(96)),
        Monomial(F(4), F(16)),
    ]


def test_expand_evaluates_correctly():
    # substitute x = 5/3 and compare against direct exponentiation
    x = F(5, 3)
    terms = binom_expand(6, F(1, 2), F(1), F(-2), F(3))
    total = sum(t.coeff * x**t.exponent for t in terms)
    assert total == (x / 2 - 2 * x**3) ** 6


def test_term_fractional_exponents():
    # 5th term of (x^(1/2) + x^(2/3))^12
    term = binom_term(12, 4, F(1), F(1, 2), F(1), F(2, 3))
    assert term == Monomial(F(20, 3), F(495))


def test_constant_term():
    # (x + x^-2)^12 has constant term 495
    terms = binom_expand(12, F(1), F(1), F(1), F(-2))
    constant = [t for t in terms if t.exponent == 0]
    assert constant == [Monomial(F(0), F(495))]


def test_term_out_of_range():
    with pytest.raises(OutOfDomain):
        binom_term(4, 5, F(1), F(1), F(1), F(0))


def test_closed_form_sums_vs_loops():
    kinds = {
        "first_n": lambda n: sum(range(1, n + 1)),
        "odd": lambda n: sum(2 * k - 1 for k in range(1, n + 1)),
        "triangular": lambda n: sum(k * (k + 1) // 2 for k in range(1, n + 1)),
        "squares": lambda n: sum(k * k for k in range(1, n + 1)),
        "recip_consecutive": lambda n: sum(
            F(1, k * (k + 1)) for k in range(1, n + 1)),
        "recip_odd": lambda n: sum(
            F(1, (2 * k - 1) * (2 * k + 1)) for k in range(1, n + 1)),
        "product_consecutive": lambda n: sum(k * (k + 1) for k in range(1, n + 1)),
    }
    assert set(kinds) == set(sum_kinds())
    checkpoints = list(range(1, 40)) + [100, 250, 500]
    for kind, loop in kinds.items():
        for n in checkpoints:
            assert closed_form_sum(kind, n) == loop(n), (kind, n)


def test_closed_form_rejects():
    with pytest.raises(UnknownKind):
        closed_form_sum("cubes", 3)
    with pytest.raises(OutOfDomain):
        closed_form_sum("first_n", 0)


def test_divisibility_families():
    for n in range(1, 301):
        assert divides(3, 5**n + 2 ** (n + 1))
        assert divides(6, n**3 + 11 * n)
        assert divides(6, 7**n - 1)
        assert divides(3, n**3 - n)
        assert divides(6, n**3 + 5 * n)
        assert divides(17, 7 * 5 ** (2 * n - 1) + 2 ** (3 * n + 1))


@given(
    st.fractions(min_value=-1, max_value=1000, max_denominator=100).filter(
        lambda h: h > -1 and h != 0),
    st.integers(2, 20),
)
def test_bernoulli_inequality(h, n):
    assert (1 + h) ** n > 1 + n * h
