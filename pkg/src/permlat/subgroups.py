"""Exhaustive subgroup enumeration for small groups.

Subgroups are found as the join-closure of the cyclic subgroups (complete
because every subgroup is the join of its cyclic subgroups). All work happens
in element-index space over a cached Cayley table, so the same table also
serves literal set computations (Dedekind products, complements).
"""

from __future__ import annotations

from .errors import BoundExceeded, NotASubgroup, NotInInterval
from .groups import PermGroup, group_from_elements
from .lattice import FiniteLattice
from .perms import Perm

DEFAULT_ORDER_BOUND = 2000


class ElementTable:
    """Indexed element list with a full Cayley table for one small group."""

    def __init__(self, G: PermGroup, order_bound: int = DEFAULT_ORDER_BOUND):
        if G.order() > order_bound:
            raise BoundExceeded(
                f"|G| = {G.order()} exceeds the brute-force bound {order_bound}"
            )
        self.group = G
        elems = sorted(p.img for p in G.elements())
        self.elems = elems
        self.index = {img: i for i, img in enumerate(elems)}
        self.n = len(elems)
        self.identity = self.index[tuple(range(G.degree))]
        self.cayley = [
            [self.index[tuple(b[x] for x in a)] for b in elems] for a in elems
        ]
        inv = [0] * self.n
        for i, row in enumerate(self.cayley):
            inv[i] = row.index(self.identity)
        self.inv = inv
        self.full = frozenset(range(self.n))

    def mul(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    def perm(self, i: int) -> Perm:
        return Perm(self.elems[i])

    def id_of(self, p: Perm) -> int:
        i = self.index.get(p.img)
        if i is None:
            raise NotASubgroup(f"{p!r} is not an element of the group")
        return i

    def closure(self, gen_ids) -> frozenset:
        """Subgroup generated by the given element ids."""
        cay = self.cayley
        seen = bytearray(self.n)
        e = self.identity
        seen[e] = 1
        out = [e]
        gens = [g for g in gen_ids if g != e]
        for g in gens:
            if not seen[g]:
                seen[g] = 1
                out.append(g)
        half = self.n // 2
        qi = 0
        while qi < len(out):
            row = cay[out[qi]]
            qi += 1
            for g in gens:
                y = row[g]
                if not seen[y]:
                    seen[y] = 1
                    out.append(y)
            if len(out) > half:
                # by Lagrange, a subgroup with more than |G|/2 elements is G
                return self.full
        return frozenset(out)

    def product_set(self, A: frozenset, B: frozenset) -> frozenset:
        """The literal set product AB = {ab : a in A, b in B}."""
        cay = self.cayley
        out = set()
        for a in A:
            row = cay[a]
            out.update(row[b] for b in B)
        return frozenset(out)

    def subgroup(self, elems: frozenset) -> PermGroup:
        return group_from_elements(
            self.group.degree, (self.perm(i) for i in elems)
        )


class SubgroupCatalog:
    """All subgroups of one small group, with meet/join/conjugation support."""

    def __init__(self, table: ElementTable):
        self.table = table
        self.subgroups = _enumerate_subgroups(table)  # sorted frozensets
        self.pos = {fz: i for i, fz in enumerate(self.subgroups)}
        self.full = frozenset(range(table.n))
        self._join_memo: dict[tuple[int, int], int] = {}

    def meet(self, i: int, j: int) -> int:
        return self.pos[self.subgroups[i] & self.subgroups[j]]

    def join(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        key = (i, j)
        got = self._join_memo.get(key)
        if got is None:
            a, b = self.subgroups[i], self.subgroups[j]
            if a <= b:
                got = j
            elif b <= a:
                got = i
            else:
                got = self.pos[self.table.closure(tuple(a | b))]
            self._join_memo[key] = got
        return got

    def conjugate(self, i: int, g: int) -> int:
        tab = self.table
        cay, ginv = tab.cayley, tab.inv[g]
        return self.pos[frozenset(cay[cay[ginv][x]][g] for x in self.subgroups[i])]

    def conjugacy_classes(self) -> list[list[int]]:
        """Orbits of subgroups under conjugation, each sorted, rep = min."""
        gens = [self.table.id_of(g) for g in self.table.group.generators]
        seen = [False] * len(self.subgroups)
        classes = []
        for i in range(len(self.subgroups)):
            if seen[i]:
                continue
            orbit = [i]
            seen[i] = True
            qi = 0
            while qi < len(orbit):
                k = orbit[qi]
                qi += 1
                for g in gens:
                    c = self.conjugate(k, g)
                    if not seen[c]:
                        seen[c] = True
                        orbit.append(c)
            classes.append(sorted(orbit))
        return classes

    def lattice(self) -> FiniteLattice:
        subs = self.subgroups
        m = len(subs)
        up = [0] * m
        for i, a in enumerate(subs):
            row = 0
            for j, b in enumerate(subs):
                if a <= b:
                    row |= 1 << j
            up[i] = row
        return FiniteLattice.from_leq(m, up, validate=(m <= 200))

    def interval_of(self, H: frozenset):
        """(lattice, member frozensets) of {K : H <= K <= G}."""
        if H not in self.pos:
            raise NotASubgroup("H is not a subgroup of G")
        members = [fz for fz in self.subgroups if H <= fz]
        m = len(members)
        up = [0] * m
        for i, a in enumerate(members):
            row = 0
            for j, b in enumerate(members):
                if a <= b:
                    row |= 1 << j
            up[i] = row
        return FiniteLattice.from_leq(m, up, validate=(m <= 200)), members

    def normal_subgroups(self) -> list[int]:
        gens = [self.table.id_of(g) for g in self.table.group.generators]
        return [
            i for i in range(len(self.subgroups))
            if all(self.conjugate(i, g) == i for g in gens)
        ]


def _enumerate_subgroups(table: ElementTable) -> list[frozenset]:
    n = table.n
    cay = table.cayley
    e = table.identity
    # cyclic subgroups, one generator id per distinct subgroup
    cyclic: dict[frozenset, int] = {}
    for x in range(n):
        if x == e:
            continue
        powers = [e]
        y = x
        while y != e:
            powers.append(y)
            y = cay[y][x]
        fz = frozenset(powers)
        rep = cyclic.get(fz)
        if rep is None or x < rep:
            cyclic[fz] = x
    atoms = sorted(cyclic.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))

    trivial = frozenset([e])
    found: dict[frozenset, tuple] = {trivial: ()}
    queue: list[tuple[frozenset, tuple]] = [(trivial, ())]
    for fz, rep in atoms:
        if fz not in found:
            found[fz] = (rep,)
            queue.append((fz, (rep,)))
    qi = 0
    while qi < len(queue):
        K, gens = queue[qi]
        qi += 1
        for fz, rep in atoms:
            if rep in K or fz <= K:
                continue
            new = table.closure(gens + (rep,))
            if new not in found:
                ngens = gens + (rep,)
                found[new] = ngens
                queue.append((new, ngens))
    return sorted(found, key=lambda fz: (len(fz), sorted(fz)))


# --- public operations ---------------------------------------------------------


def subgroup_lattice_bruteforce(G: PermGroup,
                                order_bound: int = DEFAULT_ORDER_BOUND):
    """(FiniteLattice, subgroups as PermGroups) for the full subgroup lattice."""
    cat = SubgroupCatalog(ElementTable(G, order_bound))
    lat = cat.lattice()
    return lat, [cat.table.subgroup(fz) for fz in cat.subgroups]


def interval_bruteforce(G: PermGroup, H: PermGroup,
                        order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteLattice:
    """The interval [H, G] computed by exhaustive subgroup enumeration."""
    cat = SubgroupCatalog(ElementTable(G, order_bound))
    Hfz = _subgroup_ids(cat.table, H)
    lat, _members = cat.interval_of(Hfz)
    return lat


def _subgroup_ids(table: ElementTable, H: PermGroup) -> frozenset:
    return frozenset(table.id_of(p) for p in H.elements())


def complements_in_interval(G: PermGroup, H: PermGroup, A: PermGroup,
                            order_bound: int = DEFAULT_ORDER_BOUND):
    """All B in [H, G] with A n B = H and <A, B> = G."""
    cat = SubgroupCatalog(ElementTable(G, order_bound))
    Hfz = _subgroup_ids(cat.table, H)
    Afz = _subgroup_ids(cat.table, A)
    if Hfz not in cat.pos or Afz not in cat.pos or not Hfz <= Afz:
        raise NotInInterval("need H <= A <= G with both actual subgroups")
    out = []
    for Bfz in cat.subgroups:
        if not Hfz <= Bfz:
            continue
        if Afz & Bfz == Hfz and cat.table.closure(tuple(Afz | Bfz)) == cat.full:
            out.append(cat.table.subgroup(Bfz))
    return out


def dedekind_rule_holds(table: ElementTable, A: frozenset, B: frozenset,
                        C: frozenset) -> bool:
    """Literal set check of A(C n B) = AC n B and (C n B)A = CA n B for A <= B."""
    CB = C & B
    left1 = table.product_set(A, CB)
    right1 = table.product_set(A, C) & B
    if left1 != right1:
        return False
    left2 = table.product_set(CB, A)
    right2 = table.product_set(C, A) & B
    return left2 == right2


def dedekind_rule_suite(G: PermGroup,
                        order_bound: int = DEFAULT_ORDER_BOUND):
    """Check A(C n B) = AC n B and (C n B)A = CA n B over all A <= B, C.

    Returns (number of triples checked, list of failing triples as element
    id sets).  The rule is a theorem, so the failure list should be empty;
    it exists so a violation would be reported rather than asserted away.
    """
    cat = SubgroupCatalog(ElementTable(G, order_bound))
    tab, subs = cat.table, cat.subgroups
    checked = 0
    failures = []
    for A in subs:
        PA = {}
        for ci, C in enumerate(subs):
            PA[ci] = (tab.product_set(A, C), tab.product_set(C, A))
        for B in subs:
            if not A <= B:
                continue
            for ci, C in enumerate(subs):
                checked += 1
                CB = C & B
                AC, CA = PA[ci]
                if (tab.product_set(A, CB) != AC & B
                        or tab.product_set(CB, A) != CA & B):
                    failures.append((A, B, C))
    return checked, failures


def antichain_suite(G: PermGroup, order_bound: int = DEFAULT_ORDER_BOUND,
                    catalog: "SubgroupCatalog | None" = None):
    """Check that complements permuting with A form an antichain.

    For every H <= A <= G, take the complements of A in [H, G] (meet H,
    join G) that permute with A as sets, i.e. AB = BA, equivalently
    |A||B|/|H| = |G|.  No two distinct such complements may be comparable.
    Returns (pairs checked, failures).
    """
    cat = catalog or SubgroupCatalog(ElementTable(G, order_bound))
    subs = cat.subgroups
    sizes = [len(fz) for fz in subs]
    top = len(subs) - 1
    order = sizes[top]
    checked = 0
    failures = []
    for hi, H in enumerate(subs):
        above = [i for i, fz in enumerate(subs) if H <= fz]
        h = sizes[hi]
        for ai in above:
            # complements of A in [H, G] whose set product with A is all
            # of G, i.e. which permute with A (|AB| = |A||B|/|A n B|)
            comps = [bi for bi in above
                     if cat.meet(ai, bi) == hi and cat.join(ai, bi) == top
                     and sizes[ai] * sizes[bi] == order * h]
            for x in range(len(comps)):
                b1 = comps[x]
                for b2 in comps[x + 1:]:
                    checked += 1
                    mi = cat.meet(b1, b2)
                    if mi == b1 or mi == b2:
                        failures.append((hi, ai, b1, b2))
    return checked, failures
