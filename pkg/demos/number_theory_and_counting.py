"""Worked examples: division with remainder, Euclid's algorithm, positional
numeral systems, and binomial expansions with closed-form sums."""

from fractions import Fraction

from exactmath import (
    binom,
    binom_expand,
    binom_term,
    closed_form_sum,
    factorize,
    from_base,
    gcd,
    lcm,
    to_base,
)


def main():
    print("== Euclid's algorithm ==")
    g, trace = gcd(252, 198)
    for dividend, divisor, q, r in trace:
        print(f"  {dividend} = {divisor}*{q} + {r}")
    print(f"  gcd(252, 198) = {g}, lcm(90, 24) = {lcm(90, 24)}")

    print("\n== Factorization and bases ==")
    factors = factorize(360)
    print("  360 =", " * ".join(f"{p}^{m}" for p, m in factors))
    digits = to_base(125, 7)
    print(f"  125 in base 7 is {digits}, and back: {from_base(digits)}")

    print("\n== Binomial expansion ==")
    print("  (3 + 2x)^4 coefficients:",
          [t.coeff for t in binom_expand(4, 3, 0, 2, 1)])
    t5 = binom_term(12, 4, 1, Fraction(1, 2), 1, Fraction(2, 3))
    print(f"  5th term of (x^(1/2) + x^(2/3))^12: {t5.coeff} * x^{t5.exponent}")
    print(f"  C(7, 2) = {binom(7, 2)}")

    print("\n== Closed-form sums ==")
    for kind in ("first_n", "odd", "squares"):
        print(f"  sum kind {kind!r} at n=100: {closed_form_sum(kind, 100)}")


if __name__ == "__main__":
    main()
