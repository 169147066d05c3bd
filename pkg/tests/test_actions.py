"""Block systems and the congruence-lattice construction of intervals."""

import pytest
from hypothesis import given, settings, strategies as st
import numpy as np

from permlat.actions import (
    BlockSystem,
    TransitiveGSet,
    _join_labels,
    congruence_lattice,
    coset_action,
    interval_lattice,
    join_blocks,
    meet_blocks,
    principal_congruence,
    quotient_by_core,
)
from permlat.catalog import alternating, cyclic, dihedral, symmetric
from permlat.errors import IntransitiveAction, InvalidPoint, NotASubgroup
from permlat.groups import PermGroup, trivial_group
from permlat.lattice import is_isomorphic, mlattice, partition_lattice
from permlat.perms import Perm, parse_cycles
from permlat.subgroups import interval_bruteforce


def natural_gset(G):
    return TransitiveGSet(G.degree, tuple(G.generators))


def test_principal_congruence_is_invariant_and_merges():
    A = natural_gset(dihedral(6))
    pc = principal_congruence(A, 0, 3)
    assert pc.block_of(0) == pc.block_of(3)
    for g in A.gen_images:
        assert pc.is_invariant_under(g)


def test_principal_congruence_rejects_bad_points():
    A = natural_gset(dihedral(6))
    with pytest.raises(InvalidPoint):
        principal_congruence(A, 0, 6)
    with pytest.raises(InvalidPoint):
        principal_congruence(A, 2, 2)


def test_congruence_lattice_of_c6_regular():
    # subgroups of C6 <-> divisors of 6
    lat, systems = congruence_lattice(natural_gset(cyclic(6)))
    assert lat.size == 4
    assert sorted(s.block_count for s in systems) == [1, 2, 3, 6]


def test_congruence_lattice_of_d4_natural():
    # D4 on the square: discrete, opposite-corner pairs, full
    lat, systems = congruence_lattice(natural_gset(dihedral(4)))
    assert lat.size == 3
    assert sorted(s.block_count for s in systems) == [1, 2, 4]


def test_s4_natural_action_is_primitive():
    lat, systems = congruence_lattice(natural_gset(symmetric(4)))
    assert lat.size == 2  # only discrete and full


def test_intransitive_rejected():
    G = PermGroup(4, [parse_cycles("(1 2)", 4)])
    with pytest.raises(IntransitiveAction):
        congruence_lattice(natural_gset(G))


# --- partition joins --------------------------------------------------------------


labels = st.integers(0, 5)


def canon(seq):
    seen = {}
    return [seen.setdefault(x, len(seen)) for x in seq]


@given(st.lists(labels, min_size=1, max_size=24), st.data())
def test_join_labels_matches_union_find(raw, data):
    p1 = canon(raw)
    p2 = canon(data.draw(st.lists(labels, min_size=len(raw),
                                  max_size=len(raw))))
    a1 = np.array(p1, dtype=np.int64)
    a2 = np.array(p2, dtype=np.int64)
    got, k = _join_labels(a1, max(p1) + 1, a2, max(p2) + 1)
    want = join_blocks(BlockSystem(p1), BlockSystem(p2))
    assert list(got) == canon(want.class_of)
    assert k == want.block_count


@given(st.lists(labels, min_size=1, max_size=16), st.data())
def test_meet_join_bounds(raw, data):
    p1 = BlockSystem(canon(raw))
    p2 = BlockSystem(canon(data.draw(
        st.lists(labels, min_size=len(raw), max_size=len(raw)))))
    m = meet_blocks(p1, p2)
    j = join_blocks(p1, p2)
    assert m.refines(p1) and m.refines(p2)
    assert p1.refines(j) and p2.refines(j)
    # join is idempotent and commutative
    assert join_blocks(p2, p1) == j
    assert join_blocks(j, j) == j


# --- coset actions ----------------------------------------------------------------


def test_coset_action_degree_and_transitivity():
    G = symmetric(4)
    H = PermGroup(4, [parse_cycles("(1 2 3)", 4)])
    act = coset_action(G, H)
    assert act.action.degree == 8
    assert len(act.reps) == 8
    assert act.action.is_transitive()


def test_coset_action_image_and_kernel():
    from permlat.groups import core
    G = symmetric(4)
    H = PermGroup(4, [parse_cycles("(1 2)(3 4)", 4),
                      parse_cycles("(1 3)(2 4)", 4)])
    act = coset_action(G, H)
    assert set(act.kernel.elements()) == set(core(G, H).elements())
    # first isomorphism theorem, order-wise
    assert act.image.order() * act.kernel.order() == G.order()


def test_coset_action_requires_subgroup():
    with pytest.raises(NotASubgroup):
        coset_action(alternating(4), PermGroup(4, [parse_cycles("(1 2)", 4)]))


def test_quotient_by_core_is_faithful():
    from permlat.groups import core
    G = symmetric(4)
    V4 = PermGroup(4, [parse_cycles("(1 2)(3 4)", 4),
                       parse_cycles("(1 3)(2 4)", 4)])
    Q, img = quotient_by_core(G, V4)
    assert Q.order() == G.order() // core(G, V4).order()


# --- the headline map: intervals as congruence lattices ---------------------------


@pytest.mark.parametrize("G, H, expected_size", [
    (symmetric(3), trivial_group(3), 6),          # Sub(S3)
    (symmetric(4), trivial_group(4), 30),         # Sub(S4)
    (alternating(5), trivial_group(5), 59),       # Sub(A5)
    (symmetric(4), PermGroup(4, [parse_cycles("(1 2)", 4)]), 6),
])
def test_interval_sizes(G, H, expected_size):
    assert interval_lattice(G, H).size == expected_size


def test_interval_matches_bruteforce_enumeration():
    G = symmetric(4)
    for gens in [[], ["(1 2)"], ["(1 2)(3 4)"], ["(1 2 3)"],
                 ["(1 2 3 4)"], ["(1 2)", "(3 4)"]]:
        H = PermGroup(4, [parse_cycles(s, 4) for s in gens])
        fast = interval_lattice(G, H)
        slow = interval_bruteforce(G, H)
        assert is_isomorphic(fast, slow) is not None


def test_interval_of_maximal_subgroup_is_2_chain():
    G = alternating(5)
    H = PermGroup(5, [parse_cycles("(1 2 3)", 5), parse_cycles("(1 2)(4 5)", 5)])
    assert H.order() == 6
    L = interval_lattice(G, H)
    assert L.size == 2


def test_sub_a4_is_not_modular_shape():
    # Sub(A4) has 10 subgroups
    L = interval_lattice(alternating(4), trivial_group(4))
    assert L.size == 10
    assert len(L.atoms()) == 7  # 3 subgroups of order 2, 4 of order 3
