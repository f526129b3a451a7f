import itertools

import pytest

from powergraphs.arith import euler_phi, factorize
from powergraphs.groups import (
    Alternating,
    Cyclic,
    Dicyclic,
    Dihedral,
    DirectProduct,
    GroupSpecError,
    Modular,
    OrderCapExceeded,
    Permutation,
    SemidirectZqZp,
    Symmetric,
    build_group,
    count_cyclic_subgroups_of_order,
    cyclic_subgroup,
    element_order,
    order_histogram,
)
from powergraphs.specparse import parse_group_spec

from .oracles import powers_by_repeated_product

SMALL = [
    Cyclic(1), Cyclic(6), Cyclic(12), DirectProduct((Cyclic(4), Cyclic(2))), DirectProduct((Cyclic(3), Cyclic(3))),
    Dihedral(8), Dihedral(12), Dicyclic(8), Dicyclic(12), Dicyclic(16), Modular(16), Modular(27),
    SemidirectZqZp(7, 3, 2), Symmetric(3), Symmetric(4), Alternating(4),
]


def _assoc_ok(g):
    n = g.order
    return all(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)) for a, b, c in itertools.product(range(n), repeat=3))


@pytest.mark.parametrize("spec", SMALL, ids=str)
def test_group_axioms(spec):
    g = build_group(spec)
    assert g.order == spec.order()
    n = g.order
    assert all(g.mul(0, x) == x == g.mul(x, 0) for x in range(n))
    assert all(any(g.mul(x, y) == 0 for y in range(n)) for x in range(n))
    if n <= 16:
        assert _assoc_ok(g)


def test_dihedral8_orders():
    g = build_group(Dihedral(8))
    assert g.order == 8
    assert order_histogram(g) == {1: 1, 2: 5, 4: 2}
    a = g.index[(1, 0)]
    assert element_order(g, a) == 4


def test_trivial_group():
    g = build_group(Cyclic(1))
    assert g.order == 1 and g.identity == 0 and order_histogram(g) == {1: 1}


def test_permutation_s3():
    g = build_group(parse_group_spec("perm:(1 2 3);(1 2)"))
    assert g.order == 6
    assert order_histogram(g) == {1: 1, 2: 3, 3: 2}


def test_q8_unique_involution():
    g = build_group(Dicyclic(8))
    b = g.index[(0, 1)]
    b2 = g.mul(b, b)
    assert element_order(g, b2) == 2
    assert [x for x in range(8) if element_order(g, x) == 2] == [b2]


def test_cyclic_subgroup_examples():
    g = build_group(Cyclic(12))
    assert cyclic_subgroup(g, 0) == {0}
    assert cyclic_subgroup(g, 1) == set(range(12))
    q8 = build_group(Dicyclic(8))
    i = q8.index[(1, 0)]
    sub = cyclic_subgroup(q8, i)
    assert len(sub) == 4
    assert sub == powers_by_repeated_product(q8.mul, i)


@pytest.mark.parametrize(
    "spec, hist",
    [
        (Cyclic(6), {1: 1, 2: 1, 3: 2, 6: 2}),
        (Alternating(4), {1: 1, 2: 3, 3: 8}),
        (DirectProduct((Cyclic(4), Cyclic(2))), {1: 1, 2: 3, 4: 4}),
    ],
    ids=str,
)
def test_histogram_examples(spec, hist):
    assert order_histogram(build_group(spec)) == hist


def test_cyclic_subgroup_counts():
    assert count_cyclic_subgroups_of_order(build_group(parse_group_spec("Z3xZ3")), 3) == 4
    assert count_cyclic_subgroups_of_order(build_group(Dicyclic(16)), 4) == 5
    g = build_group(Cyclic(24))
    for d in (1, 2, 3, 4, 6, 8, 12, 24):
        assert count_cyclic_subgroups_of_order(g, d) == 1


@pytest.mark.parametrize("text", ["Z12", "Z4xZ2", "D16", "Q24", "M27", "SD(7,3,2)", "S4", "A4", "Z2^4", "Q32"])
def test_counts_agree_with_distinct_subgroups(text):
    g = build_group(parse_group_spec(text))
    subs = {frozenset(powers_by_repeated_product(g.mul, x)) for x in range(g.order)}
    for d in set(order_histogram(g)):
        assert count_cyclic_subgroups_of_order(g, d) == sum(1 for s in subs if len(s) == d)


@pytest.mark.parametrize("text", ["Z12", "Z4xZ2", "D16", "Q24", "M16", "SD(7,3,2)", "S4", "A4", "Z3xZ6"])
def test_lagrange_and_phi_divisibility(text):
    g = build_group(parse_group_spec(text))
    hist = order_histogram(g)
    assert sum(hist.values()) == g.order and hist[1] == 1
    for d, c in hist.items():
        assert g.order % d == 0
        assert c % euler_phi(d) == 0
    for x in range(g.order):
        assert len(cyclic_subgroup(g, x)) == element_order(g, x)


@pytest.mark.parametrize("text", ["Z2xZ2", "Z4xZ2", "D8", "D16", "Z3xZ3", "M16", "M27", "Z2^4", "Z4xZ4", "Z9xZ3"])
def test_noncyclic_p_group_subgroup_count(text):
    g = build_group(parse_group_spec(text))
    p = factorize(g.order)[0][0]
    c = count_cyclic_subgroups_of_order(g, p)
    assert c % p == 1 and c >= p + 1


@pytest.mark.parametrize("alpha", [3, 4, 5, 6])
def test_generalized_quaternion_single_involution(alpha):
    assert count_cyclic_subgroups_of_order(build_group(Dicyclic(2**alpha)), 2) == 1


@pytest.mark.parametrize("n", range(3, 9))
def test_dihedral_from_permutations(n):
    rot = tuple(range(1, n + 1))
    refl = tuple((i, n + 1 - i) for i in range(1, n // 2 + 1))
    g = build_group(Permutation(((rot,), refl)))
    assert order_histogram(g) == order_histogram(build_group(Dihedral(2 * n)))


def test_modular_relation():
    # b a b^-1 = a^(p^(alpha-2) + 1)
    for order_, p in [(16, 2), (27, 3), (32, 2)]:
        g = build_group(Modular(order_))
        alpha = factorize(order_)[0][1]
        a = g.index[(1, 0)]
        b = g.index[(0, 1)]
        lhs = g.mul(g.mul(b, a), g.inverse(b))
        assert lhs == g.power(a, p ** (alpha - 2) + 1)
        assert element_order(g, a) == p ** (alpha - 1)
        assert element_order(g, b) == p
        assert not g.is_abelian()


def test_semidirect_is_nonabelian_of_order_pq():
    g = build_group(SemidirectZqZp(7, 3, 2))
    assert g.order == 21 and not g.is_abelian()
    assert order_histogram(g) == {1: 1, 3: 14, 7: 6}


@pytest.mark.parametrize(
    "spec",
    [Dihedral(4), Dicyclic(4), Modular(12), Modular(4), SemidirectZqZp(7, 2, 2), SemidirectZqZp(6, 2, 5), Cyclic(0)],
    ids=repr,
)
def test_invalid_parameters(spec):
    with pytest.raises(GroupSpecError):
        build_group(spec)


def test_order_cap(monkeypatch):
    with pytest.raises(OrderCapExceeded):
        build_group(Symmetric(7))
    with pytest.raises(OrderCapExceeded):
        build_group(parse_group_spec("perm:(1 2 3 4 5 6 7);(1 2)"), cap=100)
    monkeypatch.setenv("POWERGRAPHS_ORDER_CAP", "10")
    with pytest.raises(OrderCapExceeded):
        build_group(Cyclic(11))


def test_heisenberg_perm_group():
    g = build_group(parse_group_spec("perm[Heis27]:(1 4 7)(2 5 8)(3 6 9);(4 5 6)(7 9 8)"))
    assert g.order == 27 and not g.is_abelian()
    assert order_histogram(g) == {1: 1, 3: 26}
