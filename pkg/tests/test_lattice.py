import itertools

import pytest
from hypothesis import given, settings, strategies as st

from permlat.errors import (
    InvalidPoint,
    NoBoundedTop,
    NotALattice,
    NotAPartialOrder,
    PanelTooSmall,
    TooFewPanels,
)
from permlat.lattice import (
    FiniteLattice,
    chain,
    dual,
    is_antichain,
    is_isomorphic,
    is_isomorphic_bruteforce,
    mlattice,
    parachute,
    partition_lattice,
    refines,
)


def test_chain_basics():
    L = chain(4)
    assert L.size == 4
    assert L.bottom == 0 and L.top == 3
    assert L.join(1, 2) == 2
    assert L.meet(1, 2) == 1
    assert L.atoms() == [1]


def test_mlattice_basics():
    L = mlattice(3)
    assert L.size == 5
    assert len(L.atoms()) == 3
    a, b = L.atoms()[:2]
    assert L.join(a, b) == L.top
    assert L.meet(a, b) == L.bottom


def test_from_covers_rejects_cycles():
    with pytest.raises(NotAPartialOrder):
        FiniteLattice.from_covers(2, [(0, 1), (1, 0)])


def test_from_leq_rejects_unbounded_posets():
    # two maximal elements, no top
    up = [0b111, 0b010, 0b100]
    with pytest.raises(NoBoundedTop):
        FiniteLattice.from_leq(3, up)


def test_from_leq_rejects_non_lattices():
    # bounded hexagon poset where the two atoms have no least upper bound
    up = [0b111111, 0b111010, 0b111100, 0b101000, 0b110000, 0b100000]
    with pytest.raises(NotALattice):
        FiniteLattice.from_leq(6, up)


def test_interval():
    L = chain(5)
    sub, members = L.interval(1, 3)
    assert sub.size == 3
    assert members == [1, 2, 3]
    with pytest.raises(InvalidPoint):
        L.interval(3, 1)


def test_dual_is_involutive():
    for L in (chain(4), mlattice(4), partition_lattice(4)):
        assert dual(dual(L)).covers == L.covers
        assert dual(L).atoms() == L.coatoms()


def test_antichain_predicate():
    L = mlattice(3)
    assert is_antichain(L, L.atoms())
    assert not is_antichain(L, [L.bottom, L.atoms()[0]])


# --- partition lattices -----------------------------------------------------------


def test_partition_lattice_small_sizes():
    assert partition_lattice(1).size == 1
    assert partition_lattice(2).size == 2
    assert partition_lattice(4).size == 15


def test_refines():
    assert refines((0, 0, 1), (0, 0, 0))
    assert not refines((0, 0, 0), (0, 0, 1))


def test_eq4_meet_join_against_definition():
    # labels of partition_lattice elements are the partitions themselves
    L = partition_lattice(4)
    parts = L.labels
    for i, j in itertools.combinations(range(L.size), 2):
        m, jn = L.meet(i, j), L.join(i, j)
        # meet = common refinement
        common = [(parts[i][x], parts[j][x]) for x in range(4)]
        assert all(
            (common[x] == common[y]) == (parts[m][x] == parts[m][y])
            for x in range(4) for y in range(4))
        # join = least common coarsening
        uppers = [k for k in range(L.size)
                  if refines(parts[i], parts[k]) and refines(parts[j], parts[k])]
        assert jn in uppers
        assert all(L.leq(jn, k) for k in uppers)


# --- parachutes -------------------------------------------------------------------


def test_parachute_shape():
    P = parachute([chain(3), mlattice(3)])
    assert P.size == 3 + 5 - 2 + 2
    assert len(P.atoms()) == 2
    assert len(P.lower_covers(P.top)) >= 2


def test_parachute_rejects_bad_input():
    with pytest.raises(TooFewPanels):
        parachute([chain(3)])
    with pytest.raises(PanelTooSmall):
        parachute([chain(3), chain(1)])


# --- isomorphism ------------------------------------------------------------------


SMALL = [chain(1), chain(2), chain(3), chain(4), mlattice(2), mlattice(3),
         mlattice(4), partition_lattice(3),
         parachute([chain(2), chain(3)]), dual(parachute([chain(2), chain(3)]))]


def test_iso_agrees_with_bruteforce_on_all_small_pairs():
    # every lattice here is within the all-bijections oracle's reach
    for L1 in SMALL:
        for L2 in SMALL:
            fast = is_isomorphic(L1, L2)
            slow = is_isomorphic_bruteforce(L1, L2)
            assert (fast is None) == (slow is None), (L1, L2)
            if fast is not None:
                assert all(L1.leq(i, j) == L2.leq(fast[i], fast[j])
                           for i in range(L1.size) for j in range(L1.size))


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_iso_invariant_under_relabeling(rnd):
    L = partition_lattice(4)
    relab = list(range(L.size))
    rnd.shuffle(relab)
    covers = sorted((relab[i], relab[j]) for i, j in
                    ((i, j) for i in range(L.size) for j in L.upper_covers(i)))
    M = FiniteLattice.from_covers(L.size, covers)
    mapping = is_isomorphic(L, M)
    assert mapping is not None
    assert all(L.leq(i, j) == M.leq(mapping[i], mapping[j])
               for i in range(L.size) for j in range(L.size))


def test_known_non_isomorphic_pairs():
    assert is_isomorphic(mlattice(3), mlattice(4)) is None
    assert is_isomorphic(chain(3), mlattice(2)) is None
    assert is_isomorphic(partition_lattice(4), dual(partition_lattice(4))) is None


def test_eq3_is_m3():
    assert is_isomorphic(partition_lattice(3), mlattice(3)) is not None
