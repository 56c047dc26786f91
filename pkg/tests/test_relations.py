import pytest

from exactmath import (
    FinSet,
    Relation,
    divides,
    equivalence_analysis,
    factor_set,
    fn_analysis,
    fn_compose,
    fn_inverse,
    from_predicate,
    is_partial_order,
    rel_compose,
    rel_inverse,
    rel_properties,
    rel_section,
)
from exactmath.errors import DomainMismatch, NotBijective, NotEndorelation


def digit_sum(n):
    return sum(int(d) for d in str(n))


def test_from_predicate_shift_example():
    # b = a + 2 on {2..5} x {4..6}
    a, b = FinSet(range(2, 6)), FinSet(range(4, 7))
    rel = from_predicate(a, b, lambda x, y: y == x + 2)
    assert rel.pairs == frozenset({(2, 4), (3, 5), (4, 6)})
    assert rel.domain() == FinSet([2, 3, 4])
    assert rel.range() == FinSet([4, 5, 6])
    assert rel_section(rel, 3) == FinSet([5])


def test_pairs_must_fit_declared_sets():
    with pytest.raises(DomainMismatch):
        Relation(FinSet([1]), FinSet([2]), [(1, 3)])


def test_inverse_is_involution():
    rel = Relation(FinSet([1, 2]), FinSet([3, 4]), [(1, 3), (2, 3), (2, 4)])
    inv = rel_inverse(rel)
    assert inv.pairs == frozenset({(3, 1), (3, 2), (4, 2)})
    assert rel_inverse(inv) == rel


def test_property_flags_worked_cases():
    def endo(carrier, pairs):
        s = FinSet(carrier)
        return Relation(s, s, pairs)

    reflexive = endo([1, 2, 3, 4], [(1, 1), (2, 2), (3, 3), (4, 3), (4, 4)])
    assert rel_properties(reflexive)["reflexive"]

    not_reflexive = endo([1, 4, 5, 7], [(1, 1), (4, 7), (7, 4), (5, 5)])
    assert not rel_properties(not_reflexive)["reflexive"]

    symmetric = endo([1, 3, 4, 6],
                     [(1, 3), (3, 4), (4, 3), (3, 1), (4, 4), (6, 6)])
    assert rel_properties(symmetric)["symmetric"]

    not_symmetric = endo([1, 3, 4], [(1, 3), (3, 4), (3, 3), (4, 4)])
    assert not rel_properties(not_symmetric)["symmetric"]

    antisymmetric = endo([1, 3, 5, 7], [(1, 5), (3, 3), (5, 5), (5, 7), (7, 3)])
    assert rel_properties(antisymmetric)["antisymmetric"]

    both = endo([1, 3, 5, 7], [(1, 1), (3, 3), (5, 5), (7, 7)])
    flags = rel_properties(both)
    assert flags["symmetric"] and flags["antisymmetric"]

    neither = endo([1, 3, 5], [(1, 5), (3, 5), (5, 1), (5, 5)])
    flags = rel_properties(neither)
    assert not flags["symmetric"] and not flags["antisymmetric"]

    transitive = endo([2, 3, 4, 5],
                      [(2, 3), (3, 4), (2, 4), (4, 5), (3, 5), (2, 5)])
    assert rel_properties(transitive)["transitive"]


def test_properties_require_endorelation():
    rel = Relation(FinSet([1]), FinSet([2]), [(1, 2)])
    with pytest.raises(NotEndorelation):
        rel_properties(rel)


def test_equivalence_classes_123_45_6():
    carrier = FinSet(range(1, 7))
    pairs = [(n, n) for n in range(1, 7)] + [
        (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2), (5, 4), (4, 5)]
    rel = Relation(carrier, carrier, pairs)
    analysis = equivalence_analysis(rel)
    assert analysis["is_equivalence"]
    assert analysis["classes"] == [FinSet([1, 2, 3]), FinSet([4, 5]), FinSet([6])]
    assert factor_set(rel) == analysis["classes"]


def test_digit_sum_equivalence():
    carrier = FinSet(range(16, 29))
    rel = from_predicate(carrier, carrier,
                         lambda a, b: digit_sum(a) == digit_sum(b))
    analysis = equivalence_analysis(rel)
    assert analysis["is_equivalence"]
    assert analysis["classes"] == [
        FinSet([16, 25]), FinSet([17, 26]), FinSet([18, 27]), FinSet([19, 28]),
        FinSet([20]), FinSet([21]), FinSet([22]), FinSet([23]), FinSet([24])]
    # a partition: classes are disjoint and cover the carrier
    union = [e for cls in analysis["classes"] for e in cls]
    assert sorted(union) == list(carrier)


def test_divisibility_partial_order():
    carrier = FinSet([2, 4, 8, 16])
    rel = from_predicate(carrier, carrier, divides)
    assert is_partial_order(rel)
    assert not equivalence_analysis(rel)["is_equivalence"]


def test_composition():
    first = Relation(FinSet([1, 2]), FinSet([3, 4]), [(1, 3), (2, 4)])
    second = Relation(FinSet([3, 4]), FinSet([5, 6]), [(3, 5), (4, 6)])
    composed = rel_compose(first, second)
    assert composed.pairs == frozenset({(1, 5), (2, 6)})
    with pytest.raises(DomainMismatch):
        rel_compose(second, first)


def test_fn_compose_worked_example():
    # f: {1,2,3} -> {2,4}, g: {2,4} -> {1,4}; h(x) = g(f(x))
    a, b, c = FinSet([1, 2, 3]), FinSet([2, 4]), FinSet([1, 4])
    f = Relation(a, b, [(1, 2), (2, 4), (3, 2)])
    g = Relation(b, c, [(2, 1), (4, 4)])
    h = fn_compose(f, g)
    assert h.pairs == frozenset({(1, 1), (2, 4), (3, 1)})


def test_fn_analysis_flags():
    a, b = FinSet([1, 2, 3]), FinSet([4, 5, 6])
    bijection = Relation(a, b, [(1, 4), (2, 5), (3, 6)])
    assert fn_analysis(bijection) == {
        "is_function": True, "injective": True,
        "surjective": True, "bijective": True}

    squashed = Relation(a, b, [(1, 4), (2, 4), (3, 5)])
    flags = fn_analysis(squashed)
    assert flags["is_function"] and not flags["injective"] and not flags["surjective"]

    partial = Relation(a, b, [(1, 4)])
    assert not fn_analysis(partial)["is_function"]

    multivalued = Relation(a, b, [(1, 4), (1, 5), (2, 5), (3, 6)])
    assert not fn_analysis(multivalued)["is_function"]


def test_fn_inverse():
    a, b = FinSet([1, 2]), FinSet([3, 4])
    f = Relation(a, b, [(1, 3), (2, 4)])
    inv = fn_inverse(f)
    assert inv.pairs == frozenset({(3, 1), (4, 2)})
    with pytest.raises(NotBijective):
        fn_inverse(Relation(a, b, [(1, 3), (2, 3)]))
