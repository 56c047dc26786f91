"""Worked examples: proportions, ratio splits, percent problems, and the
star scheme for multi-component mixtures."""

from exactmath import (
    Affine,
    extended_split,
    percent_chain,
    percent_solve,
    simple_mixture,
    solve_proportion,
    star_scheme,
)


def main():
    print("== Proportions ==")
    x = solve_proportion(Affine(1, 9), 6, Affine.x(), 5)
    print(f"  (x+9) : 6 = x : 5  ->  x = {x}")
    parts = extended_split(198, [1, 2, 3, 5])
    print(f"  198 split 1:2:3:5 -> {', '.join(str(p) for p in parts)}")

    print("\n== Percents ==")
    print(f"  if 32% of G is 30, G = {percent_solve(i=30, p=32)}")
    start = percent_chain(final=60, deltas=[-10, 15])
    print(f"  -10% then +15% ending at 60 started from {start}")

    print("\n== Mixtures ==")
    result = simple_mixture(48, 78, 60, 10)
    print(f"  48% and 78% to 10 units of 60%: amounts {result.amounts}")
    values = [160, 140, 110, 50]
    amounts = star_scheme(values, 120, 560)
    print(f"  star scheme {values} -> 120 at total 560:")
    for value, amount in zip(values, amounts):
        print(f"    {amount} units at {value}")


if __name__ == "__main__":
    main()
