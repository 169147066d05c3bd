"""Finite permutation groups with deterministic stabilizer chains.

A ``PermGroup`` is a degree plus a generator list. The stabilizer chain is
built lazily by a deterministic Schreier-Sims run whose base is the ascending
sequence of moved points, so every derived quantity (order, element order,
coset representatives) is reproducible across runs.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .errors import (
    BoundExceeded,
    DegenerateInput,
    DegreeMismatch,
    NotASubgroup,
    NotMembers,
)
from .perms import Perm

_ELEMENT_ENUM_CAP = 1_000_000


class _Level:
    """One stabilizer-chain level: a base point, its generators and orbit."""

    __slots__ = ("base", "gens", "orbit")

    def __init__(self, base: int):
        self.base = base
        self.gens: list[Perm] = []
        self.orbit: dict[int, Perm] = {}

    def recompute_orbit(self, identity: Perm) -> None:
        orbit = {self.base: identity}
        queue = [self.base]
        qi = 0
        while qi < len(queue):
            delta = queue[qi]
            qi += 1
            u = orbit[delta]
            for s in self.gens:
                gamma = s.img[delta]
                if gamma not in orbit:
                    orbit[gamma] = u * s
                    queue.append(gamma)
        self.orbit = orbit


class StabilizerChain:
    """Full-base (0,1,..,d-1) stabilizer chain; level i stabilizes 0..i-1."""

    def __init__(self, degree: int, generators):
        self.degree = degree
        self.identity = Perm.identity(degree)
        self.levels = [_Level(i) for i in range(degree)]
        for g in generators:
            if g.is_identity():
                continue
            m = next(p for p in range(degree) if g.img[p] != p)
            for l in range(m + 1):
                self.levels[l].gens.append(g)
        self._build()
        # levels whose orbit is nontrivial, for fast sifting / canonization
        self.active = [lvl for lvl in self.levels if len(lvl.orbit) > 1]

    def _build(self) -> None:
        d = self.degree
        for lvl in self.levels:
            lvl.recompute_orbit(self.identity)
        i = d - 1
        while i >= 0:
            restart = self._process_level(i)
            if restart is None:
                i -= 1
            else:
                i = restart

    def _process_level(self, i: int):
        """Check all Schreier generators of level i; on a new strong generator,
        install it and return the level to resume from."""
        lvl = self.levels[i]
        gens = lvl.gens
        if not gens:
            return None
        orbit = lvl.orbit
        for delta in orbit:
            u_delta = orbit[delta]
            for s in gens:
                gamma = s.img[delta]
                g = u_delta * s * orbit[gamma].inverse()
                if g.is_identity():
                    continue
                h, j = self._strip(i + 1, g)
                if h is None:
                    continue
                for l in range(i + 1, j + 1):
                    self.levels[l].gens.append(h)
                    self.levels[l].recompute_orbit(self.identity)
                return j
        return None

    def _strip(self, start: int, g: Perm):
        """Sift g through levels[start:]. Return (residue, level) or (None, _)
        when g factors over the transversals."""
        h = g
        for i in range(start, self.degree):
            lvl = self.levels[i]
            pt = h.img[lvl.base]
            if pt == lvl.base:
                continue
            u = lvl.orbit.get(pt)
            if u is None:
                return h, i
            h = h * u.inverse()
        return (None, self.degree) if h.is_identity() else (h, self.degree)

    def order(self) -> int:
        n = 1
        for lvl in self.active:
            n *= len(lvl.orbit)
        return n

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            raise DegreeMismatch(
                f"permutation degree {g.degree} != group degree {self.degree}"
            )
        h = g
        for lvl in self.active:
            pt = h.img[lvl.base]
            if pt == lvl.base:
                continue
            u = lvl.orbit.get(pt)
            if u is None:
                return False
            h = h * u.inverse()
        return h.is_identity()

    def elements(self):
        """All group elements in a deterministic order."""
        elems = [self.identity]
        for lvl in reversed(self.active):
            nxt = []
            for delta in sorted(lvl.orbit):
                u = lvl.orbit[delta]
                nxt.extend(h * u for h in elems)
            elems = nxt
        return elems

    def coset_canon(self, g: Perm) -> Perm:
        """Canonical representative of the right coset (chain group) * g.

        Minimizes the image tuple lexicographically over the coset; valid
        because the chain base is the ascending sequence of moved points.
        """
        r = g
        for lvl in self.active:
            orbit = lvl.orbit
            rimg = r.img
            best = min(orbit, key=rimg.__getitem__)
            if best != lvl.base:
                r = orbit[best] * r
        return r


class PermGroup:
    """A finite permutation group on {0..degree-1} given by generators."""

    def __init__(self, degree: int, generators=()):
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Perm):
                g = Perm(g)
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {degree}"
                )
            if g.is_identity() or g.img in seen:
                continue
            seen.add(g.img)
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self._lock = threading.Lock()
        self._chain: StabilizerChain | None = None
        self._elements: list[Perm] | None = None

    # chain and derived data ----------------------------------------------

    @property
    def chain(self) -> StabilizerChain:
        chain = self._chain
        if chain is None:
            with self._lock:
                chain = self._chain
                if chain is None:
                    chain = StabilizerChain(self.degree, self.generators)
                    self._chain = chain
        return chain

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, p: Perm) -> bool:
        return self.chain.contains(p)

    def __len__(self) -> int:
        return self.order()

    def is_trivial(self) -> bool:
        return not self.generators

    def elements(self) -> list[Perm]:
        """All elements in deterministic order; bounded to keep memory sane."""
        if self._elements is None:
            if self.order() > _ELEMENT_ENUM_CAP:
                raise BoundExceeded(
                    f"refusing to enumerate {self.order()} elements"
                )
            with self._lock:
                if self._elements is None:
                    self._elements = self.chain.elements()
        return self._elements

    def identity_perm(self) -> Perm:
        return Perm.identity(self.degree)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if self.degree != other.degree:
            return False
        return all(g in other for g in self.generators)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:]
        )

    def __repr__(self):
        from .perms import cycle_string

        gens = ", ".join(cycle_string(g) for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, <{gens}>)"


@dataclass(frozen=True)
class SubgroupPair:
    """A validated pair H <= G acting on the same points."""

    parent: PermGroup
    sub: PermGroup

    def __post_init__(self):
        _require_subgroup(self.parent, self.sub)


def _require_subgroup(G: PermGroup, H: PermGroup) -> None:
    if H.degree != G.degree:
        raise NotASubgroup(f"degrees differ: {H.degree} vs {G.degree}")
    for g in H.generators:
        if g not in G:
            raise NotASubgroup(f"generator {g!r} is not in the parent group")


def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree, ())


def naive_closure(degree: int, generators) -> set[Perm]:
    """Breadth-first closure of the generators; the order oracle for tests."""
    e = Perm.identity(degree)
    seen = {e}
    frontier = [e]
    gens = [g if isinstance(g, Perm) else Perm(g) for g in generators]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def group_from_elements(degree: int, elems) -> PermGroup:
    """PermGroup generated by a (deterministically chosen) small subset of a
    known element set. The element set must be a subgroup."""
    elems = sorted((p.img for p in elems))
    target = len(elems) if elems else 1
    gens: list[Perm] = []
    group = PermGroup(degree, ())
    for img in elems:
        p = Perm(img)
        if p.is_identity() or p in group:
            continue
        gens.append(p)
        group = PermGroup(degree, gens)
        if group.order() == target:
            break
    return group


# --- permcore operations ----------------------------------------------------


def compose(p: Perm, q: Perm) -> Perm:
    return p * q


def group_order(G: PermGroup) -> int:
    return G.order()


def contains(G: PermGroup, p: Perm) -> bool:
    return p in G


def core(G: PermGroup, H: PermGroup) -> PermGroup:
    """Largest normal subgroup of G inside H.

    Computed as the fixed point of pruning H's element set against
    conjugation by the generators of G (the set of elements all of whose
    G-conjugates stay inside H is exactly the core).
    """
    _require_subgroup(G, H)
    K = {p.img for p in H.elements()}
    conj = []
    for g in G.generators:
        ginv = g.inverse().img
        conj.append((ginv, g.img))
        conj.append((g.img, ginv))
    changed = True
    while changed:
        changed = False
        doomed = []
        for k in K:
            for a, b in conj:
                # conjugate a^-1 * k * a evaluated pointwise
                c = tuple(b[k[x]] for x in a)
                if c not in K:
                    doomed.append(k)
                    break
        if doomed:
            changed = True
            K.difference_update(doomed)
    return group_from_elements(G.degree, (Perm(k) for k in K))


def is_core_free(G: PermGroup, H: PermGroup) -> bool:
    return core(G, H).is_trivial()


def normal_closure(G: PermGroup, S) -> PermGroup:
    """Smallest normal subgroup of G containing the elements of S."""
    seeds = [p if isinstance(p, Perm) else Perm(p) for p in S]
    for p in seeds:
        if p not in G:
            raise NotMembers(f"{p!r} is not an element of the ambient group")
    gens = [p for p in seeds if not p.is_identity()]
    K = PermGroup(G.degree, gens)
    conjugators = [(g.inverse(), g) for g in G.generators]
    changed = True
    while changed:
        changed = False
        for k in list(gens):
            for ginv, g in conjugators:
                c = ginv * k * g
                if c not in K:
                    gens.append(c)
                    K = PermGroup(G.degree, gens)
                    changed = True
    return K


def centralizer(G: PermGroup, N: PermGroup, scan_bound: int = 10**6) -> PermGroup:
    """C_G(N) by bounded element scan."""
    _require_subgroup(G, N)
    if G.order() > scan_bound:
        raise BoundExceeded(f"|G| = {G.order()} exceeds scan bound {scan_bound}")
    ngens = N.generators
    cent = [g for g in G.elements() if all(g * h == h * g for h in ngens)]
    return group_from_elements(G.degree, cent)


def commutator(a: Perm, b: Perm) -> Perm:
    return a.inverse() * b.inverse() * a * b


def derived_subgroup(G: PermGroup) -> PermGroup:
    gens = G.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(G, comms) if comms else trivial_group(G.degree)


def derived_series(G: PermGroup) -> list[PermGroup]:
    series = [G]
    while True:
        nxt = derived_subgroup(series[-1])
        if nxt.order() == series[-1].order():
            break
        series.append(nxt)
        if nxt.is_trivial():
            break
    return series


def is_solvable(G: PermGroup) -> bool:
    return derived_series(G)[-1].is_trivial()


def conjugacy_classes(G: PermGroup, scan_bound: int = 10**6) -> list[list[Perm]]:
    """Conjugacy classes as lists of elements, deterministic order."""
    if G.order() > scan_bound:
        raise BoundExceeded(f"|G| = {G.order()} exceeds scan bound {scan_bound}")
    elems = sorted(p.img for p in G.elements())
    conj = [(g.inverse().img, g.img) for g in G.generators]
    unseen = set(elems)
    classes = []
    for img in elems:
        if img not in unseen:
            continue
        cls = [img]
        unseen.discard(img)
        qi = 0
        while qi < len(cls):
            k = cls[qi]
            qi += 1
            for a, b in conj:
                c = tuple(b[k[x]] for x in a)
                if c in unseen:
                    unseen.discard(c)
                    cls.append(c)
        classes.append([Perm(i) for i in sorted(cls)])
    return classes


def minimal_normal_subgroups(G: PermGroup, scan_bound: int = 10**6) -> list[PermGroup]:
    """Inclusion-minimal normal closures of single nontrivial elements.

    Every minimal normal subgroup is the normal closure of any of its
    nontrivial elements, so this list is complete.
    """
    if G.is_trivial():
        return []
    closures: dict[frozenset, PermGroup] = {}
    for cls in conjugacy_classes(G, scan_bound):
        rep = cls[0]
        if rep.is_identity():
            continue
        N = normal_closure(G, [rep])
        key = frozenset(p.img for p in N.elements())
        closures.setdefault(key, N)
    keys = sorted(closures, key=lambda k: (len(k), sorted(k)))
    minimal = []
    for k in keys:
        if not any(other < k for other in keys if other is not k):
            minimal.append(closures[k])
    return minimal


def is_subdirectly_irreducible(G: PermGroup, scan_bound: int = 10**6) -> bool:
    if G.is_trivial():
        raise DegenerateInput(
            "subdirect irreducibility is undefined for the trivial group"
        )
    return len(minimal_normal_subgroups(G, scan_bound)) == 1


def is_simple(G: PermGroup, scan_bound: int = 10**6) -> bool:
    if G.is_trivial():
        return False
    order = G.order()
    for cls in conjugacy_classes(G, scan_bound):
        rep = cls[0]
        if rep.is_identity():
            continue
        if normal_closure(G, [rep]).order() != order:
            return False
    return True


def direct_product(G1: PermGroup, G2: PermGroup) -> PermGroup:
    """G1 x G2 acting on the disjoint union of the point sets."""
    d1, d2 = G1.degree, G2.degree
    gens = []
    for g in G1.generators:
        gens.append(Perm(tuple(g.img) + tuple(range(d1, d1 + d2))))
    for g in G2.generators:
        gens.append(Perm(tuple(range(d1)) + tuple(x + d1 for x in g.img)))
    return PermGroup(d1 + d2, gens)


def intersection(G: PermGroup, A: PermGroup, B: PermGroup,
                 scan_bound: int = 10**6) -> PermGroup:
    """A intersect B by scanning the smaller subgroup's elements."""
    small, big = (A, B) if A.order() <= B.order() else (B, A)
    if small.order() > scan_bound:
        raise BoundExceeded("intersection scan bound exceeded")
    elems = [p for p in small.elements() if p in big]
    return group_from_elements(G.degree, elems)


def permutes(G: PermGroup, A: PermGroup, B: PermGroup) -> bool:
    """True iff AB = BA, decided by |<A,B>| == |A|*|B| / |A n B|."""
    _require_subgroup(G, A)
    _require_subgroup(G, B)
    join = PermGroup(G.degree, A.generators + B.generators)
    inter = intersection(G, A, B)
    return join.order() * inter.order() == A.order() * B.order()
