"""Group-property checkers and witness reports.

The flags here describe a group G paired (where relevant) with a core-free
subgroup H whose interval [H, G] has a parachute shape: a bottom, n >= 2
incomparable panels hanging from the top, at least two panels with more than
two elements.  When that shape is present, every nontrivial normal subgroup N
of G satisfies NH = G and C_G(N) = 1, G is subdirectly irreducible, and G is
nonsolvable; the checkers verify these consequences directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import alternating, symmetric
from .errors import (
    BoundExceeded,
    DegenerateInput,
    EmptyInput,
    NotCoreFree,
)
from .groups import (
    PermGroup,
    centralizer,
    core,
    is_core_free,
    is_solvable,
    is_subdirectly_irreducible,
    minimal_normal_subgroups,
)
from .lattice import FiniteLattice
from .perms import Perm, cycle_string
from .subgroups import ElementTable, SubgroupCatalog

ISO_ORDER_BOUND = 720  # largest order we brute-force group isomorphism at
_ALT_SYM_MAX_DEGREE = 8


@dataclass
class WitnessReport:
    """Named boolean flags with per-flag evidence.

    A flag is True/False when decided, or None when not applicable (for
    example a lemma conclusion whose hypothesis gate failed, or subdirect
    irreducibility of the trivial group).
    """

    flags: dict = field(default_factory=dict)
    evidence: dict = field(default_factory=dict)

    def set(self, name: str, value, evidence=None):
        self.flags[name] = value
        if evidence is not None:
            self.evidence[name] = evidence


def check_conjunction(reports: list) -> WitnessReport:
    """Flag-wise conjunction of reports; evidence merged with source labels."""
    if not reports:
        raise EmptyInput("need at least one report")
    out = WitnessReport()
    names = []
    for r in reports:
        for name in r.flags:
            if name not in names:
                names.append(name)
    for name in names:
        vals = [r.flags.get(name) for r in reports if name in r.flags]
        if any(v is False for v in vals):
            out.flags[name] = False
        elif any(v is None for v in vals):
            out.flags[name] = None
        else:
            out.flags[name] = True
        out.evidence[name] = [
            {"source": i, "evidence": r.evidence[name]}
            for i, r in enumerate(reports) if name in r.evidence
        ]
    return out


def has_no_abelian_normal(G: PermGroup) -> bool:
    """True iff G has no nontrivial abelian normal subgroup.

    Any such subgroup would contain an abelian minimal normal subgroup, so
    checking minimal normal subgroups suffices.
    """
    if G.is_trivial():
        return True
    return all(not N.is_abelian() for N in minimal_normal_subgroups(G))


def trivial_centralizers(G: PermGroup) -> bool:
    """True iff C_G(N) = 1 for every nontrivial normal N.

    Since M <= N implies C_G(N) <= C_G(M), it is enough to check the minimal
    normal subgroups.
    """
    if G.is_trivial():
        return True
    return all(centralizer(G, N).is_trivial()
               for N in minimal_normal_subgroups(G))


# --- brute-force group isomorphism --------------------------------------------


def _element_order(table: ElementTable, x: int) -> int:
    k, y = 1, x
    while y != table.identity:
        y = table.mul(y, x)
        k += 1
    return k


def _order_profile(table: ElementTable) -> dict:
    prof: dict[int, int] = {}
    for x in range(table.n):
        o = _element_order(table, x)
        prof[o] = prof.get(o, 0) + 1
    return prof


def _conjugacy_reps(table: ElementTable) -> list[int]:
    seen = bytearray(table.n)
    reps = []
    gens = [table.id_of(g) for g in table.group.generators]
    for x in range(table.n):
        if seen[x]:
            continue
        reps.append(x)
        orbit = [x]
        seen[x] = 1
        qi = 0
        while qi < len(orbit):
            y = orbit[qi]
            qi += 1
            for g in gens:
                z = table.mul(table.mul(table.inv[g], y), g)
                if not seen[z]:
                    seen[z] = 1
                    orbit.append(z)
    return reps


def _hom_from_gen_images(tg: ElementTable, th: ElementTable, gen_ids, images):
    """Extend gen |-> image to a map on all of G, or None on conflict.

    The map is built along a BFS spanning tree, then every (element, gen)
    product is checked, which pins the full homomorphism property.
    """
    phi = {tg.identity: th.identity}
    queue = [tg.identity]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for g, h in zip(gen_ids, images):
            y = tg.mul(x, g)
            w = th.mul(phi[x], h)
            known = phi.get(y)
            if known is None:
                phi[y] = w
                queue.append(y)
            elif known != w:
                return None
    if len(set(phi.values())) != th.n:
        return None
    return phi


def groups_isomorphic(G: PermGroup, H: PermGroup,
                      order_bound: int = ISO_ORDER_BOUND) -> bool:
    """Abstract group isomorphism by generator-image backtracking."""
    if G.order() != H.order():
        return False
    if G.order() > order_bound:
        raise BoundExceeded(
            f"group isomorphism brute force capped at order {order_bound}")
    if G.order() == 1:
        return True
    tg, th = ElementTable(G), ElementTable(H)
    if _order_profile(tg) != _order_profile(th):
        return False
    gen_ids = [tg.id_of(g) for g in G.generators]
    orders = [_element_order(tg, g) for g in gen_ids]
    by_order: dict[int, list[int]] = {}
    for x in range(th.n):
        by_order.setdefault(_element_order(th, x), []).append(x)
    # the first generator's image may be fixed up to conjugacy: composing an
    # isomorphism with conjugation by any element of H is again one
    reps = set(_conjugacy_reps(th))
    cand = [[x for x in by_order.get(o, []) if i > 0 or x in reps]
            for i, o in enumerate(orders)]
    images = [0] * len(gen_ids)

    def assign(i: int) -> bool:
        if i == len(gen_ids):
            return _hom_from_gen_images(tg, th, gen_ids, images) is not None
        for x in cand[i]:
            images[i] = x
            if assign(i + 1):
                return True
        return False

    return assign(0)


def is_alt_or_sym(G: PermGroup) -> bool:
    """Whether G is abstractly isomorphic to some A_n or S_n (n <= 8)."""
    o = G.order()
    targets = []
    fact = 1
    for n in range(1, _ALT_SYM_MAX_DEGREE + 1):
        fact *= n
        if fact == o:
            targets.append(symmetric(n))
        if n >= 3 and fact // 2 == o:
            targets.append(alternating(n))
    if o == 1:
        return True  # S1 = A1
    if o == 2:
        return True  # S2
    return any(groups_isomorphic(G, T) for T in targets)


# --- parachute consequences ----------------------------------------------------


def parachute_panels(L: FiniteLattice):
    """Panel partition [atom, top] of a parachute-shaped lattice, or None.

    The shape requires: at least two atoms, and every element other than the
    bottom and the top lies above exactly one atom.
    """
    if L.size < 4:
        return None
    atoms = L.atoms()
    if len(atoms) < 2:
        return None
    for x in range(L.size):
        if x == L.bottom or x == L.top:
            continue
        if sum(1 for a in atoms if L.leq(a, x)) != 1:
            return None
    return [L.interval(a, L.top)[0] for a in atoms]


def verify_parachute_consequences(G: PermGroup, H: PermGroup,
                                  order_bound: int = 2000) -> WitnessReport:
    """Check the lemma consequences of a parachute-shaped interval [H, G].

    The hypothesis gate: [H, G] is a parachute with >= 2 panels of which
    >= 2 have more than two elements.  Sub-checks are always computed and
    reported as observations; the lemma conclusion flags are asserted (set
    to a boolean) only when the gate passes, and left None otherwise.
    """
    from .actions import interval_lattice

    if not is_core_free(G, H):
        raise NotCoreFree("the lemma requires H core-free in G")
    report = WitnessReport()
    L = interval_lattice(G, H)
    panels = parachute_panels(L)
    gate = panels is not None and sum(1 for p in panels if p.size > 2) >= 2
    report.set("parachute_gate", gate, {
        "interval_size": L.size,
        "panel_sizes": sorted(p.size for p in panels) if panels else None,
    })

    cat = SubgroupCatalog(ElementTable(G, order_bound))
    tab = cat.table
    Hids = frozenset(tab.id_of(p) for p in H.elements())
    mins = minimal_normal_subgroups(G) if not G.is_trivial() else []
    nh_ok, nh_ev = True, []
    for N in mins:
        Nids = frozenset(tab.id_of(p) for p in N.elements())
        hit = tab.product_set(Nids, Hids) == tab.full
        nh_ok = nh_ok and hit
        nh_ev.append({"normal_order": N.order(), "NH_is_G": hit})
    cz_ok = all(centralizer(G, N).is_trivial() for N in mins)
    try:
        sdi = is_subdirectly_irreducible(G)
    except DegenerateInput:
        sdi = None
    solv = is_solvable(G)
    hered_ok, hered_bad = True, None
    for fz in cat.subgroups:
        if Hids <= fz and fz != tab.full:
            Y = tab.subgroup(fz)
            if not core(G, Y).is_trivial():
                hered_ok = False
                hered_bad = [cycle_string(p) for p in Y.generators]
                break

    observed = {
        "NH_equals_G_all_minimal": (nh_ok, nh_ev),
        "trivial_centralizers": (cz_ok, None),
        "subdirectly_irreducible": (sdi, None),
        "solvable": (solv, None),
        "no_abelian_normal": (has_no_abelian_normal(G), None),
        "core_free_bottom": (True, None),
        "core_free_all_Y": (hered_ok, {"counterexample": hered_bad}),
    }
    for name, (value, ev) in observed.items():
        report.set(f"observed_{name}", value, ev)
        # lemma conclusions are only claimed under the hypothesis gate
        report.set(name, value if gate else None)
    return report


def property_table(G: PermGroup) -> dict:
    """The class flags for one group, None where literally undefined."""
    try:
        sdi = is_subdirectly_irreducible(G)
    except DegenerateInput:
        sdi = None
    return {
        "solvable": is_solvable(G),
        "subdirectly_irreducible": sdi,
        "alt_or_sym": is_alt_or_sym(G),
        "trivial_centralizers": trivial_centralizers(G),
        "no_abelian_normal": has_no_abelian_normal(G),
    }
