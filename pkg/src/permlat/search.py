"""Search a catalog of groups for witnesses of L = [H, G].

Only one subgroup per conjugacy class is tested: conjugate subgroups have
isomorphic intervals, so the pruning is lossless (this is itself verified in
the test suite by an unpruned search over small groups).
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import interval_lattice
from .catalog import Catalog
from .errors import EmptyCatalog
from .groups import PermGroup, core, is_core_free
from .lattice import FiniteLattice, is_isomorphic
from .subgroups import ElementTable, SubgroupCatalog

DEFAULT_LIMIT = 10


@dataclass(frozen=True)
class Witness:
    """A certified representation L = [subgroup, group]."""

    name: str
    group: PermGroup
    subgroup: PermGroup
    iso: tuple  # interval element i |-> target element iso[i]
    core_free: bool
    hereditary_core_free: bool


@dataclass(frozen=True)
class SearchResult:
    witnesses: tuple
    truncated: bool


def _iso_valid(L1: FiniteLattice, L2: FiniteLattice, iso) -> bool:
    if L1.size != L2.size or len(iso) != L1.size:
        return False
    if sorted(iso) != list(range(L2.size)):
        return False
    for i in range(L1.size):
        for j in range(L1.size):
            if L1.leq(i, j) != L2.leq(iso[i], iso[j]):
                return False
    return True


def _hereditary_core_free(G: PermGroup, cat: SubgroupCatalog,
                          Hids: frozenset) -> bool:
    for fz in cat.subgroups:
        if Hids <= fz and fz != cat.table.full:
            if not core(G, cat.table.subgroup(fz)).is_trivial():
                return False
    return True


def find_representations(L: FiniteLattice, catalog: Catalog, *,
                         core_free_only: bool = False,
                         hereditary: bool = False,
                         max_group_order: int | None = None,
                         limit: int = DEFAULT_LIMIT) -> SearchResult:
    """Scan the catalog smallest group first for subgroups H with [H,G] = L.

    Witnesses come out sorted by (|G|, |H|, catalog name); at most ``limit``
    are returned and ``truncated`` reports whether more exist.
    """
    if len(catalog) == 0:
        raise EmptyCatalog("cannot search an empty catalog")
    entries = sorted(catalog, key=lambda e: (e.group.order(), e.name))
    found: list[Witness] = []
    truncated = False
    for entry in entries:
        G = entry.group
        if max_group_order is not None and G.order() > max_group_order:
            continue
        cat = SubgroupCatalog(ElementTable(G))
        classes = cat.conjugacy_classes()
        for cls in sorted(classes, key=lambda c: c[0]):
            fz = cat.subgroups[cls[0]]
            interval, _members = cat.interval_of(fz)
            if interval.size != L.size:
                continue
            H = cat.table.subgroup(fz)
            canonical = interval_lattice(G, H)
            iso = is_isomorphic(canonical, L)
            if iso is None:
                continue
            cf = is_core_free(G, H)
            if core_free_only and not cf:
                continue
            hcf = cf and _hereditary_core_free(G, cat, fz)
            if hereditary and not hcf:
                continue
            found.append(Witness(entry.name, G, H, tuple(iso), cf, hcf))
            if len(found) > limit:
                truncated = True
                break
        if truncated:
            break
    return SearchResult(tuple(found[:limit]), truncated)


def certify(w: Witness, L: FiniteLattice) -> bool:
    """Recompute the interval and flags from scratch and validate w against L."""
    try:
        if not w.subgroup.is_subgroup_of(w.group):
            return False
        interval = interval_lattice(w.group, w.subgroup)
        if not _iso_valid(interval, L, w.iso):
            return False
        cf = is_core_free(w.group, w.subgroup)
        if cf != w.core_free:
            return False
        cat = SubgroupCatalog(ElementTable(w.group))
        Hids = frozenset(cat.table.id_of(p) for p in w.subgroup.elements())
        hcf = cf and _hereditary_core_free(w.group, cat, Hids)
        return hcf == w.hereditary_core_free
    except Exception:
        return False
