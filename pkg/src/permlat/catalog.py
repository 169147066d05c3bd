"""Constructors for standard small groups and the built-in search catalog."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateInput
from .groups import PermGroup, direct_product, trivial_group
from .perms import Perm
from .subgroups import ElementTable, SubgroupCatalog


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise DegenerateInput("cyclic group needs n >= 1")
    if n == 1:
        return trivial_group(1)
    return PermGroup(n, [Perm(tuple((i + 1) % n for i in range(n)))])


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise DegenerateInput("symmetric group needs n >= 1")
    if n == 1:
        return trivial_group(1)
    swap = Perm.from_cycles(n, [(0, 1)])
    if n == 2:
        return PermGroup(2, [swap])
    return PermGroup(n, [swap, Perm(tuple((i + 1) % n for i in range(n)))])


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise DegenerateInput("alternating group needs n >= 1")
    if n <= 2:
        return trivial_group(max(n, 1))
    three = Perm.from_cycles(n, [(0, 1, 2)])
    if n == 3:
        return PermGroup(3, [three])
    if n % 2:
        big = Perm(tuple((i + 1) % n for i in range(n)))
    else:
        big = Perm.from_cycles(n, [tuple(range(1, n))])
    return PermGroup(n, [three, big])


def dihedral(n: int) -> PermGroup:
    """Symmetries of the regular n-gon on its n vertices (order 2n)."""
    if n < 3:
        raise DegenerateInput("dihedral group needs n >= 3")
    rot = Perm(tuple((i + 1) % n for i in range(n)))
    flip = Perm(tuple((n - i) % n for i in range(n)))
    return PermGroup(n, [rot, flip])


def klein_four() -> PermGroup:
    return PermGroup(4, [Perm.from_cycles(4, [(0, 1), (2, 3)]),
                         Perm.from_cycles(4, [(0, 2), (1, 3)])])


def quaternion() -> PermGroup:
    """Q8 in its regular representation on 8 points."""
    units = [(1, 0, 0, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, -1, 0, 0),
             (0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, 0, 0, -1)]
    index = {q: i for i, q in enumerate(units)}

    def qmul(p, q):
        a1, b1, c1, d1 = p
        a2, b2, c2, d2 = q
        return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    gens = []
    for g in [(0, 1, 0, 0), (0, 0, 1, 0)]:
        gens.append(Perm(tuple(index[qmul(u, g)] for u in units)))
    return PermGroup(8, gens)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    group: PermGroup


class Catalog:
    """A deduplicated, named collection of permutation groups to search over."""

    def __init__(self):
        self.entries: list[CatalogEntry] = []
        self._seen: set = set()

    def add(self, name: str, group: PermGroup) -> bool:
        """Add an entry; returns False if an equal group is already present."""
        key = (group.degree, frozenset(p.img for p in group.elements()))
        if key in self._seen:
            return False
        self._seen.add(key)
        self.entries.append(CatalogEntry(name, group))
        return True

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


_PRODUCT_BASES = [
    ("C2", cyclic, 2), ("C3", cyclic, 3), ("C4", cyclic, 4),
    ("C5", cyclic, 5), ("C6", cyclic, 6), ("S3", symmetric, 3),
    ("D4", dihedral, 4), ("Q8", quaternion, None), ("A4", alternating, 4),
    ("S4", symmetric, 4), ("A5", alternating, 5),
]


def builtin_catalog(max_order: int | None = None,
                    product_cap: int = 64) -> Catalog:
    """The standard search catalog.

    Cyclic groups up to C12, V4 and Q8, dihedral groups up to D8, symmetric
    and alternating groups up to degree 6, direct products of two small
    groups up to ``product_cap``, and every subgroup of S_d for d <= 5.
    """
    cat = Catalog()
    cat.add("1", trivial_group(1))
    for k in range(2, 13):
        cat.add(f"C{k}", cyclic(k))
    cat.add("V4", klein_four())
    cat.add("Q8", quaternion())
    for k in range(3, 9):
        cat.add(f"D{k}", dihedral(k))
    for n in range(2, 7):
        cat.add(f"S{n}", symmetric(n))
    for n in range(3, 7):
        cat.add(f"A{n}", alternating(n))
    bases = [(name, ctor(arg) if arg is not None else ctor())
             for name, ctor, arg in _PRODUCT_BASES]
    for i, (na, A) in enumerate(bases):
        for nb, B in bases[i:]:
            if A.order() * B.order() <= product_cap:
                cat.add(f"{na}x{nb}", direct_product(A, B))
    for d in range(3, 6):
        sub = SubgroupCatalog(ElementTable(symmetric(d)))
        for i, fz in enumerate(sub.subgroups):
            cat.add(f"Sub(S{d})#{i}", sub.table.subgroup(fz))
    if max_order is not None:
        out = Catalog()
        for e in cat:
            if e.group.order() <= max_order:
                out.add(e.name, e.group)
        return out
    return cat
