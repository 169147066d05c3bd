"""Stabilizer-chain machinery checked against naive element enumeration."""

import pytest
from hypothesis import given, settings, strategies as st

from permlat.catalog import alternating, cyclic, dihedral, quaternion, symmetric
from permlat.errors import NotASubgroup
from permlat.groups import (
    PermGroup,
    centralizer,
    conjugacy_classes,
    core,
    derived_series,
    direct_product,
    group_from_elements,
    is_core_free,
    is_simple,
    is_solvable,
    is_subdirectly_irreducible,
    minimal_normal_subgroups,
    naive_closure,
    normal_closure,
    trivial_group,
)
from permlat.perms import Perm, parse_cycles


small_groups = st.sampled_from([
    trivial_group(1), cyclic(6), dihedral(4), quaternion(),
    symmetric(3), symmetric(4), alternating(4), alternating(5),
])


@given(small_groups)
def test_order_matches_naive_closure(G):
    assert G.order() == len(naive_closure(G.degree, G.generators))


@given(small_groups)
def test_elements_are_exactly_the_closure(G):
    assert set(G.elements()) == naive_closure(G.degree, G.generators)


@given(small_groups, st.randoms(use_true_random=False))
def test_membership(G, rnd):
    elems = G.elements()
    assert rnd.choice(elems) in G
    # a random non-member is rejected
    outside = Perm(tuple(rnd.sample(range(G.degree), G.degree)))
    assert (outside in G) == (outside in set(elems))


def test_known_orders():
    assert symmetric(6).order() == 720
    assert alternating(6).order() == 360
    assert dihedral(7).order() == 14
    assert quaternion().order() == 8
    assert direct_product(symmetric(3), cyclic(4)).order() == 24


def test_coset_canon_constant_on_cosets():
    G = symmetric(4)
    H = PermGroup(4, [parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)])
    chain = H.chain
    reps = {}
    for g in G.elements():
        rep = chain.coset_canon(g)
        # canonical rep determines the coset Hg
        key = frozenset((h * g).img for h in H.elements())
        reps.setdefault(key, rep)
        assert reps[key] == rep
    assert len(reps) == G.order() // H.order()


# --- the core ------------------------------------------------------------------


def core_by_conjugate_intersection(G, H):
    """Oracle: the intersection of all conjugates of H, by literal sets."""
    helems = set(H.elements())
    out = set(helems)
    for g in G.elements():
        gi = g.inverse()
        out &= {gi * h * g for h in helems}
    return out


@pytest.mark.parametrize("G, H", [
    (symmetric(4), PermGroup(4, [parse_cycles("(1 2)", 4)])),
    (symmetric(4), PermGroup(4, [parse_cycles("(1 2)(3 4)", 4),
                                 parse_cycles("(1 3)(2 4)", 4)])),
    (symmetric(4), PermGroup(4, [parse_cycles("(1 2 3)", 4),
                                 parse_cycles("(1 2)", 4)])),
    (dihedral(6), PermGroup(6, [parse_cycles("(1 2 3 4 5 6)", 6)])),
    (alternating(5), PermGroup(5, [parse_cycles("(1 2 3)", 5)])),
])
def test_core_against_conjugate_intersection(G, H):
    got = set(core(G, H).elements())
    assert got == core_by_conjugate_intersection(G, H)


def test_core_is_kernel_of_coset_action():
    # second oracle: elements fixing every right coset Hr, i.e. Hrg = Hr
    from permlat.actions import coset_action
    G = symmetric(4)
    H = PermGroup(4, [parse_cycles("(1 2)(3 4)", 4),
                      parse_cycles("(1 3)(2 4)", 4)])
    act = coset_action(G, H)
    canon = H.chain.coset_canon
    kernel = {g for g in G.elements()
              if all(canon(r * g) == r for r in act.reps)}
    assert kernel == set(core(G, H).elements())


def test_core_requires_subgroup():
    with pytest.raises(NotASubgroup):
        core(alternating(4), PermGroup(4, [parse_cycles("(1 2)", 4)]))


def test_core_free_examples():
    G = symmetric(4)
    assert is_core_free(G, PermGroup(4, [parse_cycles("(1 2)", 4)]))
    V4 = PermGroup(4, [parse_cycles("(1 2)(3 4)", 4),
                       parse_cycles("(1 3)(2 4)", 4)])
    assert not is_core_free(G, V4)


# --- normal structure ------------------------------------------------------------


def test_normal_closure_of_a_transposition_in_s4():
    N = normal_closure(symmetric(4), [parse_cycles("(1 2)", 4)])
    assert N.order() == 24


def test_derived_series_of_s4():
    orders = [g.order() for g in derived_series(symmetric(4))]
    assert orders == [24, 12, 4, 1]


def test_solvability():
    assert is_solvable(symmetric(4))
    assert is_solvable(quaternion())
    assert not is_solvable(symmetric(5))
    assert not is_solvable(alternating(5))


def test_simplicity():
    assert is_simple(alternating(5))
    assert is_simple(cyclic(7))
    assert not is_simple(cyclic(6))
    assert not is_simple(symmetric(5))


def test_minimal_normal_subgroups_of_s4():
    mins = minimal_normal_subgroups(symmetric(4))
    assert [N.order() for N in mins] == [4]  # just the Klein four-group
    assert is_subdirectly_irreducible(symmetric(4))
    assert not is_subdirectly_irreducible(cyclic(6))


def test_centralizer_oracle():
    G = symmetric(4)
    N = PermGroup(4, [parse_cycles("(1 2)(3 4)", 4),
                      parse_cycles("(1 3)(2 4)", 4)])
    got = set(centralizer(G, N).elements())
    want = {g for g in G.elements()
            if all(g * h == h * g for h in N.elements())}
    assert got == want


def test_conjugacy_class_sizes_of_s4():
    sizes = sorted(len(c) for c in conjugacy_classes(symmetric(4)))
    assert sizes == [1, 3, 6, 6, 8]


def test_group_from_elements_picks_few_generators():
    G = group_from_elements(5, alternating(5).elements())
    assert G.order() == 60
    assert len(G.generators) <= 5
