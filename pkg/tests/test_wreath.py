"""The wreath-product lift U = S^n x| G over the coset action of (G, H)."""

import random
import warnings

import pytest

from permlat.catalog import alternating, cyclic, symmetric
from permlat.errors import HypothesisViolated, IndexTooSmall, NotSimpleWarning, ShapeMismatch
from permlat.groups import PermGroup, is_core_free
from permlat.lattice import chain, dual, is_isomorphic, partition_lattice
from permlat.perms import Perm, parse_cycles
from permlat.wreath import (
    WreathElement,
    build_kurzweil,
    diagonal_interval,
    dual_interval_check,
    element_to_perm,
    kurzweil_iterate_size,
    verify_corefree_lift,
    wreath_identity,
    wreath_multiply,
)


def reference():
    S = alternating(5)
    G = symmetric(3)
    H = PermGroup(3, [parse_cycles("(1 2)", 3)])
    return build_kurzweil(S, G, H)


@pytest.fixture(scope="module")
def W():
    return reference()


def random_wreath_element(rnd, S, G, n):
    selems = S.elements()
    gelems = G.elements()
    return WreathElement(tuple(rnd.choice(selems) for _ in range(n)),
                         rnd.choice(gelems))


def test_wreath_multiply_matches_permutation_product(W):
    rnd = random.Random(20260826)
    S, G = alternating(5), symmetric(3)
    for _ in range(200):
        u = random_wreath_element(rnd, S, G, W.n)
        v = random_wreath_element(rnd, S, G, W.n)
        assert element_to_perm(wreath_multiply(u, v)) == \
            element_to_perm(u) * element_to_perm(v)


def test_wreath_identity_acts_as_identity(W):
    e = wreath_identity(W.n, W.k)
    assert element_to_perm(e).is_identity()
    rnd = random.Random(7)
    u = random_wreath_element(rnd, alternating(5), symmetric(3), W.n)
    assert wreath_multiply(u, e).coords == u.coords


def test_shape_mismatch_rejected():
    with pytest.raises(ShapeMismatch):
        wreath_multiply(wreath_identity(3, 5), wreath_identity(2, 5))


def test_reference_sizes(W):
    assert W.n == 3 and W.k == 5
    assert W.U.degree == 15
    assert W.U.order() == 1_296_000
    assert W.D.order() == 60
    assert W.Gbar.order() == 6
    assert W.DGbar.order() == 360
    assert W.base_power.order() == 60 ** 3


def test_reference_lift_is_core_free(W):
    assert verify_corefree_lift(W)
    assert is_core_free(W.U, W.DGbar)


def test_upper_interval_is_dual_of_lower(W):
    ok, upper = dual_interval_check(W)
    assert ok
    # [H, G] for H maximal in S3 is a 2-chain, self-dual
    assert is_isomorphic(upper, chain(2)) is not None


def test_diagonal_interval_is_dual_partition_lattice(W):
    L = diagonal_interval(W)
    assert is_isomorphic(L, dual(partition_lattice(3))) is not None


def test_iterate_size_report(W):
    rep = kurzweil_iterate_size(W, alternating(5))
    assert rep["m"] == 3600
    assert rep["degree"] == 18000
    # 60^3600 * 1296000: digit count checks the big-integer path
    assert rep["digits"] == 6408


def test_small_index_rejected():
    S = alternating(5)
    G = symmetric(2)
    with pytest.raises(IndexTooSmall):
        build_kurzweil(S, G, PermGroup(2))


def test_non_corefree_h_warns():
    S = alternating(5)
    G = cyclic(6)
    H = PermGroup(6, [parse_cycles("(1 4)(2 5)(3 6)", 6)])  # normal, index 3
    with pytest.warns(HypothesisViolated):
        build_kurzweil(S, G, H)


def test_non_simple_base_warns():
    with pytest.warns(NotSimpleWarning):
        build_kurzweil(cyclic(4), symmetric(3),
                       PermGroup(3, [parse_cycles("(1 2)", 3)]))
