"""Brute-force subgroup enumeration and the literal set-product suites."""

import pytest

from permlat.catalog import alternating, cyclic, dihedral, quaternion, symmetric
from permlat.errors import BoundExceeded, NotASubgroup
from permlat.groups import PermGroup, naive_closure, trivial_group
from permlat.perms import parse_cycles
from permlat.subgroups import (
    ElementTable,
    SubgroupCatalog,
    antichain_suite,
    complements_in_interval,
    dedekind_rule_holds,
    dedekind_rule_suite,
    interval_bruteforce,
    subgroup_lattice_bruteforce,
)


@pytest.fixture(scope="module")
def s4cat():
    return SubgroupCatalog(ElementTable(symmetric(4)))


# known subgroup counts (classical, easy to find tabulated)
@pytest.mark.parametrize("G, count", [
    (cyclic(12), 6),          # divisors of 12
    (quaternion(), 6),        # 1, Z, three C4, Q8
    (dihedral(4), 10),
    (symmetric(3), 6),
    (alternating(4), 10),
    (symmetric(4), 30),
    (alternating(5), 59),
])
def test_subgroup_counts(G, count):
    lat, subs = subgroup_lattice_bruteforce(G)
    assert lat.size == count == len(subs)


def test_every_enumerated_set_is_a_subgroup(s4cat):
    tab = s4cat.table
    for fz in s4cat.subgroups:
        elems = {tab.perm(i) for i in fz}
        assert naive_closure(4, elems) == elems


def test_enumeration_respects_order_bound():
    with pytest.raises(BoundExceeded):
        ElementTable(symmetric(4), order_bound=10)


def test_meet_join_are_intersection_and_generation(s4cat):
    subs = s4cat.subgroups
    tab = s4cat.table
    for i in range(0, len(subs), 5):
        for j in range(0, len(subs), 7):
            meet = subs[s4cat.meet(i, j)]
            assert meet == subs[i] & subs[j]
            join = subs[s4cat.join(i, j)]
            assert join == tab.closure(tuple(subs[i] | subs[j]))


def test_s4_subgroup_conjugacy_classes(s4cat):
    sizes = sorted(len(c) for c in s4cat.conjugacy_classes())
    # 11 classes: 1, C2 (x2), C3, C4, V4 (x2), S3, C6? no -- D4, A4, S4
    assert len(sizes) == 11
    assert sum(sizes) == 30


def test_normal_subgroup_orders(s4cat):
    orders = sorted(len(s4cat.subgroups[i]) for i in s4cat.normal_subgroups())
    assert orders == [1, 4, 12, 24]


def test_interval_of_matches_interval_bruteforce(s4cat):
    G = symmetric(4)
    H = PermGroup(4, [parse_cycles("(1 2)", 4)])
    fz = frozenset(s4cat.table.id_of(p) for p in H.elements())
    lat, members = s4cat.interval_of(fz)
    assert lat.size == interval_bruteforce(G, H).size == 6


def test_interval_of_rejects_non_subgroup_sets(s4cat):
    # a set that misses the identity cannot be a subgroup
    with pytest.raises(NotASubgroup):
        s4cat.interval_of(frozenset({1, 2}))


# --- set products ----------------------------------------------------------------


def test_product_set_matches_literal_products(s4cat):
    tab = s4cat.table
    A = s4cat.subgroups[3]
    B = s4cat.subgroups[7]
    want = {tab.cayley[a][b] for a in A for b in B}
    assert set(tab.product_set(A, B)) == want


def test_dedekind_rule_on_random_triples(s4cat):
    tab = s4cat.table
    subs = s4cat.subgroups
    for ai in range(0, 30, 4):
        for bi in range(0, 30, 5):
            if not subs[ai] <= subs[bi]:
                continue
            for ci in range(0, 30, 3):
                assert dedekind_rule_holds(tab, subs[ai], subs[bi], subs[ci])


def test_dedekind_fails_without_the_containment(s4cat):
    # the modular law needs A <= B; hunt for a witness that drops it
    tab, subs = s4cat.table, s4cat.subgroups
    for A in subs:
        for B in subs:
            if A <= B:
                continue
            for C in subs:
                CB = C & B
                if tab.product_set(A, CB) != tab.product_set(A, C) & B:
                    return
    pytest.fail("A <= B hypothesis appears superfluous on S4")


def test_suites_are_clean_on_s4():
    checked, failures = dedekind_rule_suite(symmetric(4))
    assert checked > 0 and not failures
    checked, failures = antichain_suite(symmetric(4))
    assert checked > 0 and not failures


def test_complements_in_sub_s3():
    # in Sub(S3) = [1, S3], an order-2 subgroup is complemented by C3
    G = symmetric(3)
    H = trivial_group(3)
    A = PermGroup(3, [parse_cycles("(1 2)", 3)])
    comps = complements_in_interval(G, H, A)
    orders = sorted(c.order() for c in comps)
    assert 3 in orders
