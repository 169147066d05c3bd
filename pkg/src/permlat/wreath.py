"""Wreath products S^n x| Gbar built from a coset action of (G, H).

Given a subgroup H <= G of index n and a group S, the group G acts on the n
right cosets of H; the wreath product U = S^n x| Gbar is realised as a
permutation group on n * k points (k = degree of S), the point (i, p) being
sent by (s_1, ..., s_n, x) to (x(i), s_i(p)).  The diagonal subgroup D and
the top copy Gbar generate a subgroup DGbar of order |S| * |Gbar| whose
upper interval in Sub(U) is dual to the interval [H, G] when H is core-free
in G, S is nonabelian simple, and n >= 3.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .actions import _coset_table, interval_lattice
from .errors import (
    BoundExceeded,
    HypothesisViolated,
    IndexTooSmall,
    NotSimpleWarning,
    ShapeMismatch,
)
from .groups import PermGroup, _require_subgroup, core, is_core_free, is_simple
from .lattice import FiniteLattice
from .perms import Perm


@dataclass(frozen=True)
class WreathElement:
    """A tuple (s_1, ..., s_n, x): n coordinates in S and a top permutation."""

    coords: tuple
    top: Perm

    def __post_init__(self):
        if len(self.coords) != self.top.degree:
            raise ShapeMismatch(
                f"{len(self.coords)} coordinates but top degree {self.top.degree}"
            )

    @property
    def n(self) -> int:
        return len(self.coords)


def wreath_identity(n: int, k: int) -> WreathElement:
    return WreathElement(tuple(Perm.identity(k) for _ in range(n)),
                         Perm.identity(n))


def wreath_multiply(u: WreathElement, v: WreathElement) -> WreathElement:
    """(s_1, ..., s_n, x)(t_1, ..., t_n, y) = (s_1 t_x(1), ..., s_n t_x(n), xy)."""
    if u.n != v.n:
        raise ShapeMismatch(f"block counts differ: {u.n} != {v.n}")
    if u.coords[0].degree != v.coords[0].degree:
        raise ShapeMismatch("coordinate degrees differ")
    x = u.top
    coords = tuple(u.coords[i] * v.coords[x.img[i]] for i in range(u.n))
    return WreathElement(coords, u.top * v.top)


def element_to_perm(u: WreathElement) -> Perm:
    """The permutation of the n*k points (i, p) |-> (x(i), s_i(p))."""
    k = u.coords[0].degree
    img = [0] * (u.n * k)
    for i, s in enumerate(u.coords):
        base = u.top.img[i] * k
        row = i * k
        for p in range(k):
            img[row + p] = base + s.img[p]
    return Perm(tuple(img))


def _block_copy(s: Perm, i: int, n: int) -> Perm:
    """s acting on block i only."""
    k = s.degree
    coords = [Perm.identity(k)] * n
    coords[i] = s
    return element_to_perm(WreathElement(tuple(coords), Perm.identity(n)))


def _diagonal(s: Perm, n: int) -> Perm:
    return element_to_perm(WreathElement((s,) * n, Perm.identity(n)))


def _top_copy(x: Perm, k: int) -> Perm:
    return element_to_perm(
        WreathElement(tuple(Perm.identity(k) for _ in range(x.degree)), x))


@dataclass(frozen=True)
class WreathGroup:
    """The permutation realisation of S^n x| Gbar with its named subgroups."""

    U: PermGroup
    n: int
    k: int
    S: PermGroup
    D: PermGroup
    Gbar: PermGroup        # top copy, acting on blocks, trivial in coordinates
    DGbar: PermGroup
    base_group: PermGroup      # the original G
    base_subgroup: PermGroup   # the original H
    Gbar_small: PermGroup      # the coset image of G on n points
    warnings: tuple = field(default=())

    @property
    def base_power(self) -> PermGroup:
        """S^n: all coordinate copies of S, trivial top."""
        gens = [_block_copy(s, i, self.n)
                for i in range(self.n) for s in self.S.generators]
        return PermGroup(self.n * self.k, gens)


def build_kurzweil(S: PermGroup, G: PermGroup, H: PermGroup) -> WreathGroup:
    """Build U = S^n x| Gbar from the action of G on the cosets of H.

    Warns (without failing) when H is not core-free in G or S is not
    nonabelian simple, since the duality theorem needs both; raises
    IndexTooSmall when n = |G:H| < 3.
    """
    _require_subgroup(G, H)
    reps, _index, gen_images, _image_of = _coset_table(G, H)
    n = len(reps)
    if n < 3:
        raise IndexTooSmall(f"need |G:H| >= 3, got {n}")
    notes = []
    if not is_core_free(G, H):
        msg = "H is not core-free in G; the duality theorem does not apply"
        warnings.warn(msg, HypothesisViolated, stacklevel=2)
        notes.append(msg)
    if S.is_abelian() or not is_simple(S):
        msg = "S is not nonabelian simple; the duality theorem does not apply"
        warnings.warn(msg, NotSimpleWarning, stacklevel=2)
        notes.append(msg)
    k = S.degree
    Gbar_small = PermGroup(n, gen_images)
    first_block = [_block_copy(s, 0, n) for s in S.generators]
    top_gens = [_top_copy(x, k) for x in gen_images]
    U = PermGroup(n * k, first_block + top_gens)
    D = PermGroup(n * k, [_diagonal(s, n) for s in S.generators])
    Gbar = PermGroup(n * k, top_gens)
    DGbar = PermGroup(n * k, D.generators + Gbar.generators)
    assert U.order() == S.order() ** n * Gbar_small.order()
    assert D.order() == S.order()
    assert DGbar.order() == S.order() * Gbar_small.order()
    return WreathGroup(U, n, k, S, D, Gbar, DGbar, G, H, Gbar_small,
                       tuple(notes))


DEFAULT_INDEX_CAP = 100_000


def verify_corefree_lift(W: WreathGroup,
                         index_cap: int = DEFAULT_INDEX_CAP) -> bool:
    """Whether core(U, DGbar) is trivial.

    The theorem guarantees this whenever H is core-free in G, S is nonabelian
    simple, and n >= 3; with those hypotheses violated the answer is still
    computed but carries no guarantee.
    """
    m = W.U.order() // W.DGbar.order()
    if m > index_cap:
        raise BoundExceeded(f"index {m} exceeds cap {index_cap}")
    return core(W.U, W.DGbar).is_trivial()


def dual_interval_check(W: WreathGroup,
                        index_cap: int = DEFAULT_INDEX_CAP):
    """(ok, lattice): whether [DGbar, U] is dual to [H, G], and the former."""
    from .lattice import dual, is_isomorphic

    m = W.U.order() // W.DGbar.order()
    if m > index_cap:
        raise BoundExceeded(f"index {m} exceeds cap {index_cap}")
    upper = interval_lattice(W.U, W.DGbar)
    lower = interval_lattice(W.base_group, W.base_subgroup)
    return is_isomorphic(upper, dual(lower)) is not None, upper


def diagonal_interval(W: WreathGroup,
                      index_cap: int = DEFAULT_INDEX_CAP) -> FiniteLattice:
    """The interval [D, S^n], dual to the partition lattice Eq(n)."""
    Sn = W.base_power
    m = Sn.order() // W.D.order()
    if m > index_cap:
        raise BoundExceeded(f"index {m} exceeds cap {index_cap}")
    return interval_lattice(Sn, W.D)


def kurzweil_iterate_size(W: WreathGroup, S2: PermGroup) -> dict:
    """Size report for the next iterate W2 = S2^m x| Ubar, m = |U : DGbar|.

    Never materializes the group: everything is big-integer arithmetic.
    """
    m = W.U.order() // W.DGbar.order()
    order = S2.order() ** m * W.U.order()
    # digit count without the int->str conversion limit biting us:
    # (bit_length - 1) * log10(2) underestimates log10, then walk up
    digits = max(1, int((order.bit_length() - 1) * 0.30102999566398114))
    while 10 ** digits <= order:
        digits += 1
    return {
        "m": m,
        "order": order,
        "digits": digits,
        "degree": m * S2.degree,
    }
