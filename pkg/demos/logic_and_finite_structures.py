"""Worked examples: truth tables and tautologies, finite set algebra,
relation properties, and classification of finite operation tables."""

from exactmath import (
    FinSet,
    Relation,
    cayley_table,
    classify,
    classify_structure,
    equivalence_analysis,
    parse_formula,
    powerset,
    rel_properties,
    set_ops,
    truth_table,
)


def main():
    print("== Truth tables ==")
    f = parse_formula("(p -> q) <-> (!q -> !p)")
    print(truth_table(f))
    print(f"  contraposition is a {classify(f).value}")

    print("\n== Set algebra ==")
    a = FinSet(["a", "b", "c", "d", "e", "f"])
    b = FinSet(["d", "e", "f", "g", "h"])
    for op in ("union", "intersect", "diff", "symdiff"):
        print(f"  A {op} B = {set_ops(a, b, op)}")
    print(f"  |P({{a,b,c}})| = {len(powerset(FinSet(['a', 'b', 'c'])))}")

    print("\n== Relations ==")
    carrier = FinSet([1, 2, 3, 4, 5, 6])
    blocks = ({1, 2, 3}, {4, 5}, {6})
    pairs = [(x, y) for block in blocks for x in block for y in block]
    rel = Relation(carrier, carrier, pairs)
    props = rel_properties(rel)
    print("  flags:", {k: v for k, v in props.items() if v})
    print("  classes:", ", ".join(str(c) for c in
                                  equivalence_analysis(rel)["classes"]))

    print("\n== Finite structures ==")
    magma = cayley_table((0, 1, 2, 3, 4, 5), lambda a, b: (a + b) % 6)
    info = classify_structure(magma)
    print(magma)
    print(f"  (Z6, +) classifies as: {info['class'].value}, "
          f"neutral element {info['neutral']}")


if __name__ == "__main__":
    main()
