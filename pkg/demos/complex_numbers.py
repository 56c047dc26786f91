"""Worked examples: exact Gaussian-rational arithmetic, powers of i,
polar form, De Moivre's theorem, and n-th roots."""

import math

from exactmath import (
    GaussianRational,
    from_polar,
    i_pow,
    pow_int,
    roots_n,
    to_polar,
)


def main():
    print("== Exact arithmetic ==")
    z1, z2 = GaussianRational(3, 4), GaussianRational(2, -5)
    print(f"  ({z1}) * ({z2}) = {z1 * z2}")
    print(f"  ({z1}) / ({z2}) = {z1 / z2}")

    print("\n== Powers of i ==")
    power = GaussianRational(1)
    for _ in range(80):
        power = power * GaussianRational(-1, -1)
    total = i_pow(81) + i_pow(43) + power / GaussianRational(2**40) + i_pow(19)
    print(f"  i^81 + i^43 + (-1-i)^80 / 2^40 + i^19 = {total}")

    print("\n== Polar form and De Moivre ==")
    p = to_polar(GaussianRational(1, 1))
    print(f"  1+i has r = {p.r:.10g}, theta = {p.theta:.10g}")
    p8 = pow_int(p, 8)
    x, y = from_polar(p8)
    print(f"  (1+i)^8 = {x:.10g} + {y:.10g}i  (r = {p8.r:.10g})")

    print("\n== Cube roots of 1 - i ==")
    for root in roots_n(GaussianRational(1, -1), 3):
        print(f"  r = {root.r:.10g}, theta = {math.degrees(root.theta):.10g} deg")


if __name__ == "__main__":
    main()
