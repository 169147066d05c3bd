"""Finite lattices as immutable values.

Elements are opaque indices 0..m-1. The order is stored as bitmask rows:
``up[i]`` has bit j set iff i <= j. Construction validates the partial order;
meet/join existence is checked exhaustively up to a size bound (larger
lattices built internally come from constructions that guarantee lattice-ness
and may skip the quadratic check).
"""

from __future__ import annotations

import itertools

from .errors import (
    BoundExceeded,
    InvalidPoint,
    NoBoundedTop,
    NotALattice,
    NotAPartialOrder,
    PanelTooSmall,
    TooFewPanels,
)

VALIDATION_BOUND = 200


def _bits(mask: int):
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


class FiniteLattice:
    """A finite lattice on indices 0..size-1."""

    __slots__ = ("size", "up", "down", "covers", "bottom", "top", "labels")

    def __init__(self, size, up, down, covers, bottom, top, labels=None):
        # internal; use from_covers / from_leq
        self.size = size
        self.up = up
        self.down = down
        self.covers = covers
        self.bottom = bottom
        self.top = top
        self.labels = labels

    # construction ----------------------------------------------------------

    @staticmethod
    def from_covers(size: int, covers, labels=None) -> "FiniteLattice":
        if size <= 0:
            raise NotAPartialOrder("size must be positive")
        adj = [0] * size
        pairs = set()
        for a, b in covers:
            if not (0 <= a < size and 0 <= b < size):
                raise NotAPartialOrder(f"cover ({a},{b}) out of range")
            if a == b:
                raise NotAPartialOrder(f"self-loop cover ({a},{b})")
            pairs.add((a, b))
        for a, b in pairs:
            adj[a] |= 1 << b
        up = _reachability(size, adj)
        for i in range(size):
            for j in _bits(up[i] & ~(1 << i)):
                if up[j] >> i & 1:
                    raise NotAPartialOrder(f"cycle through elements {i} and {j}")
        return FiniteLattice.from_leq(size, up, labels=labels)

    @staticmethod
    def from_leq(size: int, up, labels=None,
                 validate: bool = True) -> "FiniteLattice":
        """Build from reflexive-transitive bitmask rows (assumed a poset)."""
        up = list(up)
        for i in range(size):
            up[i] |= 1 << i
        down = [0] * size
        for i in range(size):
            for j in _bits(up[i]):
                down[j] |= 1 << i
        full = (1 << size) - 1
        bottoms = [i for i in range(size) if up[i] == full]
        tops = [i for i in range(size) if down[i] == full]
        if len(bottoms) != 1 or len(tops) != 1:
            raise NoBoundedTop("no unique bottom/top element")
        covers = _transitive_reduction(size, up, down)
        lat = FiniteLattice(size, tuple(up), tuple(down), covers,
                            bottoms[0], tops[0], labels)
        if validate and size <= VALIDATION_BOUND:
            lat._validate_lattice()
        return lat

    def _validate_lattice(self) -> None:
        size, up, down = self.size, self.up, self.down
        # topo[i] earlier => i lower; strict because i<j implies |up i|>|up j|
        pc_up = [bin(u).count("1") for u in up]
        pc_down = [bin(d).count("1") for d in down]
        for i in range(size):
            for j in range(i + 1, size):
                common = up[i] & up[j]
                c = max(_bits(common), key=pc_up.__getitem__)
                if common & ~up[c]:
                    raise NotALattice(f"elements {i},{j} have no join")
                common = down[i] & down[j]
                c = max(_bits(common), key=pc_down.__getitem__)
                if common & ~down[c]:
                    raise NotALattice(f"elements {i},{j} have no meet")

    # queries -----------------------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def join(self, i: int, j: int) -> int:
        common = self.up[i] & self.up[j]
        pc = [(bin(self.up[c]).count("1"), c) for c in _bits(common)]
        best = max(pc)[1]
        if common & ~self.up[best]:
            raise NotALattice(f"elements {i},{j} have no join")
        return best

    def meet(self, i: int, j: int) -> int:
        common = self.down[i] & self.down[j]
        pc = [(bin(self.down[c]).count("1"), c) for c in _bits(common)]
        best = max(pc)[1]
        if common & ~self.down[best]:
            raise NotALattice(f"elements {i},{j} have no meet")
        return best

    def atoms(self) -> list[int]:
        return sorted(b for a, b in self.covers if a == self.bottom)

    def coatoms(self) -> list[int]:
        return sorted(a for a, b in self.covers if b == self.top)

    def upper_covers(self, i: int) -> list[int]:
        return [b for a, b in self.covers if a == i]

    def lower_covers(self, i: int) -> list[int]:
        return [a for a, b in self.covers if b == i]

    def interval(self, lo: int, hi: int):
        """Sublattice {x : lo <= x <= hi} plus the index map into self."""
        if not self.leq(lo, hi):
            raise InvalidPoint(f"{lo} is not below {hi}")
        members = sorted(_bits(self.up[lo] & self.down[hi]))
        pos = {x: k for k, x in enumerate(members)}
        m = len(members)
        up = [0] * m
        for k, x in enumerate(members):
            for y in _bits(self.up[x] & self.down[hi] & self.up[lo]):
                up[k] |= 1 << pos[y]
        return FiniteLattice.from_leq(m, up), members

    def __eq__(self, other):
        return (isinstance(other, FiniteLattice) and self.size == other.size
                and self.up == other.up)

    def __hash__(self):
        return hash((self.size, self.up))

    def __repr__(self):
        return f"FiniteLattice(size={self.size}, covers={len(self.covers)})"


def _reachability(size: int, adj) -> list[int]:
    up = [None] * size
    state = [0] * size  # 0 new, 1 in progress, 2 done

    order = []
    for root in range(size):
        if state[root]:
            continue
        stack = [(root, iter(_bits(adj[root])))]
        state[root] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for child in it:
                if state[child] == 0:
                    state[child] = 1
                    stack.append((child, iter(_bits(adj[child]))))
                    advanced = True
                    break
                if state[child] == 1:
                    raise NotAPartialOrder("cover relation has a cycle")
            if not advanced:
                stack.pop()
                state[node] = 2
                order.append(node)
    for node in order:  # children are finished before parents
        mask = 1 << node
        for child in _bits(adj[node]):
            mask |= up[child]
        up[node] = mask
    return up


def _transitive_reduction(size: int, up, down) -> tuple:
    covers = []
    for i in range(size):
        strict = up[i] & ~(1 << i)
        for j in _bits(strict):
            between = strict & (down[j] & ~(1 << j))
            if not between:
                covers.append((i, j))
    return tuple(sorted(covers))


# --- constructors -------------------------------------------------------------


def chain(k: int) -> FiniteLattice:
    """The k-element chain."""
    if k < 1:
        raise BoundExceeded("chain needs k >= 1")
    return FiniteLattice.from_covers(k, [(i, i + 1) for i in range(k - 1)])


def mlattice(k: int) -> FiniteLattice:
    """M_k: a bottom, k pairwise-incomparable atoms, and a top."""
    if k < 1:
        raise BoundExceeded("mlattice needs k >= 1")
    covers = [(0, i) for i in range(1, k + 1)]
    covers += [(i, k + 1) for i in range(1, k + 1)]
    return FiniteLattice.from_covers(k + 2, covers)


def dual(L: FiniteLattice) -> FiniteLattice:
    """Order-reversed lattice on the same indices; an involution."""
    covers = tuple(sorted((b, a) for a, b in L.covers))
    return FiniteLattice(L.size, L.down, L.up, covers, L.top, L.bottom, L.labels)


def _set_partitions(n: int):
    """All set partitions of {0..n-1} as restricted-growth label tuples."""
    def rec(prefix, maxlab):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for lab in range(maxlab + 2):
            prefix.append(lab)
            yield from rec(prefix, max(maxlab, lab))
            prefix.pop()
    if n == 0:
        return
    yield from rec([0], 0)


def refines(p, q) -> bool:
    """True iff partition labels p refine q (every p-class inside a q-class)."""
    seen = {}
    for pl, ql in zip(p, q):
        if pl in seen:
            if seen[pl] != ql:
                return False
        else:
            seen[pl] = ql
    return True


def partition_lattice(n: int, n_cap: int = 7) -> FiniteLattice:
    """The lattice Eq(n) of set partitions of an n-element set, ordered by
    refinement (finer below coarser)."""
    if n < 1:
        raise BoundExceeded("partition lattice needs n >= 1")
    if n > n_cap:
        raise BoundExceeded(f"n = {n} exceeds the configured cap {n_cap}")
    parts = list(_set_partitions(n))
    m = len(parts)
    up = [0] * m
    for i, p in enumerate(parts):
        for j, q in enumerate(parts):
            if refines(p, q):
                up[i] |= 1 << j
    return FiniteLattice.from_leq(m, up, labels=parts,
                                  validate=(m <= VALIDATION_BOUND))


def parachute(panels) -> FiniteLattice:
    """Glue the panels at a shared top and hang a new bottom below their
    bottoms, which become atoms."""
    panels = list(panels)
    if len(panels) < 2:
        raise TooFewPanels("a parachute needs at least two panels")
    for L in panels:
        if L.size < 2:
            raise PanelTooSmall("every panel must have at least two elements")
    size = sum(L.size for L in panels) - (len(panels) - 1) + 1
    top = size - 1
    covers = []
    offset = 1  # 0 is the new bottom
    for L in panels:
        # panel indices minus its top land at offset..; panel top -> shared top
        members = [x for x in range(L.size) if x != L.top]
        pos = {x: offset + k for k, x in enumerate(members)}
        pos[L.top] = top
        for a, b in L.covers:
            covers.append((pos[a], pos[b]))
        covers.append((0, pos[L.bottom]))
        offset += len(members)
    return FiniteLattice.from_covers(size, covers)


def is_antichain(L: FiniteLattice, subset) -> bool:
    subset = list(subset)
    for x in subset:
        if not (0 <= x < L.size):
            raise InvalidPoint(f"element {x} out of range")
    return not any(
        x != y and L.leq(x, y)
        for x in subset for y in subset
    )


# --- isomorphism ---------------------------------------------------------------


def _cover_lists(L: FiniteLattice):
    ups = [[] for _ in range(L.size)]
    downs = [[] for _ in range(L.size)]
    for a, b in L.covers:
        ups[a].append(b)
        downs[b].append(a)
    return ups, downs


def _joint_refine(struct1, struct2, c1, c2):
    """Refine two colorings together until stable, with a shared palette."""
    ups1, downs1 = struct1
    ups2, downs2 = struct2

    def keys(ups, downs, colors):
        return [
            (colors[i],
             tuple(sorted(colors[j] for j in ups[i])),
             tuple(sorted(colors[j] for j in downs[i])))
            for i in range(len(colors))
        ]

    while True:
        k1 = keys(ups1, downs1, c1)
        k2 = keys(ups2, downs2, c2)
        palette = {k: c for c, k in enumerate(sorted(set(k1) | set(k2)))}
        n1 = [palette[k] for k in k1]
        n2 = [palette[k] for k in k2]
        if len(set(n1)) == len(set(c1)) and len(set(n2)) == len(set(c2)):
            return n1, n2
        c1, c2 = n1, n2


def _verify_mapping(L1: FiniteLattice, L2: FiniteLattice, mapping) -> bool:
    up2 = L2.up
    for i, mi in enumerate(mapping):
        translated = 0
        for j in _bits(L1.up[i]):
            translated |= 1 << mapping[j]
        if translated != up2[mi]:
            return False
    return True


def is_isomorphic(L1: FiniteLattice, L2: FiniteLattice):
    """An order isomorphism L1 -> L2 as an index list, or None.

    Individualization-refinement: colors are refined by cover multisets
    until stable; while some color class is ambiguous, one element of the
    smallest class is pinned in L1 and every same-colored element of L2 is
    tried in turn.  Leaves are verified against the full order relation.
    """
    if L1.size != L2.size:
        return None
    size = L1.size
    s1 = _cover_lists(L1)
    s2 = _cover_lists(L2)

    def initial(L):
        return [(bin(L.up[i]).count("1"), bin(L.down[i]).count("1"))
                for i in range(size)]

    def search(c1, c2):
        c1, c2 = _joint_refine(s1, s2, c1, c2)
        count1: dict[int, int] = {}
        count2: dict[int, int] = {}
        for c in c1:
            count1[c] = count1.get(c, 0) + 1
        for c in c2:
            count2[c] = count2.get(c, 0) + 1
        if count1 != count2:
            return None
        ambiguous = [(n, c) for c, n in count1.items() if n > 1]
        if not ambiguous:
            where2 = {c: j for j, c in enumerate(c2)}
            mapping = [where2[c] for c in c1]
            return mapping if _verify_mapping(L1, L2, mapping) else None
        _n, color = min(ambiguous)
        x = c1.index(color)
        for y in (j for j in range(size) if c2[j] == color):
            d1 = list(c1)
            d2 = list(c2)
            d1[x] = size  # fresh color pins x <-> y
            d2[y] = size
            got = search(d1, d2)
            if got is not None:
                return got
        return None

    return search(initial(L1), initial(L2))


def is_isomorphic_bruteforce(L1: FiniteLattice, L2: FiniteLattice, cap: int = 8):
    """All-bijections isomorphism oracle for small lattices (tests only)."""
    if L1.size != L2.size:
        return None
    if L1.size > cap:
        raise BoundExceeded(f"brute-force isomorphism capped at size {cap}")
    size = L1.size
    for perm in itertools.permutations(range(size)):
        if all(
            (L1.up[i] >> j & 1) == (L2.up[perm[i]] >> perm[j] & 1)
            for i in range(size) for j in range(size)
        ):
            return list(perm)
    return None
