from dataclasses import replace

import pytest

from permlat.catalog import builtin_catalog
from permlat.lattice import chain, mlattice, partition_lattice
from permlat.search import certify, find_representations


@pytest.fixture(scope="module")
def catalog():
    return builtin_catalog(max_order=24)


def test_m3_comes_from_the_klein_group(catalog):
    res = find_representations(mlattice(3), catalog, limit=3)
    assert res.witnesses
    w = res.witnesses[0]  # smallest group first
    assert w.group.order() == 4
    assert w.subgroup.order() == 1
    assert w.group.is_abelian()


def test_m4_needs_s3(catalog):
    res = find_representations(mlattice(4), catalog, limit=3)
    w = res.witnesses[0]
    assert w.group.order() == 6
    assert not w.group.is_abelian()


def test_core_free_filter(catalog):
    res = find_representations(chain(2), catalog, core_free_only=True,
                               limit=10)
    assert res.witnesses
    assert all(w.core_free for w in res.witnesses)


def test_hereditary_filter_implies_core_free(catalog):
    res = find_representations(chain(3), catalog, hereditary=True, limit=10)
    for w in res.witnesses:
        assert w.hereditary_core_free and w.core_free


def test_truncation_flag(catalog):
    few = find_representations(chain(2), catalog, limit=1)
    assert few.truncated
    assert len(few.witnesses) == 1


def test_max_group_order(catalog):
    res = find_representations(chain(2), catalog, max_group_order=6, limit=50)
    assert all(w.group.order() <= 6 for w in res.witnesses)


def test_no_witness_for_unrepresented_shape(catalog):
    # Eq(4) needs groups far beyond order 24
    res = find_representations(partition_lattice(4), catalog, limit=2)
    assert not res.witnesses
    assert not res.truncated


def test_all_witnesses_certify(catalog):
    for L in (mlattice(3), mlattice(4), chain(2), chain(3)):
        for w in find_representations(L, catalog, limit=4).witnesses:
            assert certify(w, L)


def test_certify_rejects_tampering(catalog):
    L = mlattice(3)
    w = find_representations(L, catalog, limit=1).witnesses[0]
    assert certify(w, L)
    # wrong target lattice
    assert not certify(w, mlattice(4))
    # corrupted isomorphism
    bad_iso = tuple(reversed(w.iso))
    assert not certify(replace(w, iso=bad_iso), L) or list(bad_iso) == list(w.iso)
    # subgroup swapped for the whole group
    assert not certify(replace(w, subgroup=w.group), L)
