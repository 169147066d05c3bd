"""Ship-gate checks behind the ``selftest`` CLI command.

Each criterion is an independent end-to-end check of one advertised
behaviour, verified against oracles that do not share code with the thing
under test (literal set arithmetic, Cayley-table brute force, Bell-triangle
arithmetic, hand-verified classification facts).  ``run_all`` executes them
in order and ``render`` turns the outcome into canonical, byte-stable text:
no timings, no absolute paths, LF endings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .actions import interval_lattice
from .catalog import Catalog, CatalogEntry, alternating, builtin_catalog, symmetric
from .formats import canonical_json, lattice_json, witness_json
from .lattice import (
    FiniteLattice,
    chain,
    dual,
    is_isomorphic,
    mlattice,
    parachute,
    partition_lattice,
)
from .groups import PermGroup
from .perms import Perm
from .props import property_table
from .search import certify, find_representations
from .subgroups import (
    ElementTable,
    SubgroupCatalog,
    antichain_suite,
    dedekind_rule_suite,
)
from .wreath import (
    build_kurzweil,
    diagonal_interval,
    dual_interval_check,
    kurzweil_iterate_size,
    verify_corefree_lift,
)

#: wall-clock budget per criterion, seconds (None = no stated budget)
BUDGETS = {1: 60, 2: 60, 3: 120, 4: 120, 5: 10, 6: 30,
           7: 60, 8: 60, 9: 120, 10: None}

NAMES = {
    1: "interval-congruence-identification",
    2: "dedekind-rule",
    3: "antichain-corollary",
    4: "kurzweil-reference-instance",
    5: "parachute-constructor",
    6: "partition-lattices",
    7: "property-checker-tables",
    8: "search-witnesses",
    9: "monotonicity-reductions",
    10: "determinism",
}


@dataclass
class CriterionResult:
    cid: int
    name: str
    passed: bool
    details: str


class AcceptanceContext:
    """Shared caches so later criteria reuse earlier subgroup enumerations."""

    def __init__(self, threads: int = 1):
        self.threads = threads
        self._catalog: Catalog | None = None
        self._subcats: dict[str, SubgroupCatalog] = {}

    def catalog(self) -> Catalog:
        if self._catalog is None:
            self._catalog = builtin_catalog(max_order=360)
        return self._catalog

    def subcat(self, entry: CatalogEntry) -> SubgroupCatalog:
        cat = self._subcats.get(entry.name)
        if cat is None:
            cat = SubgroupCatalog(ElementTable(entry.group))
            self._subcats[entry.name] = cat
        return cat


# --- criterion 1: congruence-lattice intervals vs. brute force ----------------


def _sweep_entry(entry: CatalogEntry, cat: SubgroupCatalog):
    """(pairs checked, first failing subgroup or None) for one group."""
    G = entry.group
    pairs = 0
    for fz in cat.subgroups:
        H = cat.table.subgroup(fz)
        fast = interval_lattice(G, H)
        slow, _members = cat.interval_of(fz)
        pairs += 1
        if is_isomorphic(fast, slow) is None:
            return pairs, sorted(fz)
    return pairs, None


def criterion_1(ctx: AcceptanceContext) -> CriterionResult:
    groups = 0
    pairs = 0
    for entry in ctx.catalog():
        bad = None
        groups += 1
        p, bad = _sweep_entry(entry, ctx.subcat(entry))
        pairs += p
        if bad is not None:
            return CriterionResult(
                1, NAMES[1], False,
                f"mismatch in {entry.name} at subgroup {bad}")
    return CriterionResult(
        1, NAMES[1], True, f"groups={groups} pairs={pairs}")


# --- criterion 2: Dedekind's rule as literal set equalities -------------------


def criterion_2(ctx: AcceptanceContext) -> CriterionResult:
    total = 0
    for name, G in (("S4", symmetric(4)), ("A5", alternating(5))):
        checked, failures = dedekind_rule_suite(G)
        total += checked
        if failures:
            return CriterionResult(
                2, NAMES[2], False, f"{len(failures)} violations in {name}")
    return CriterionResult(2, NAMES[2], True, f"triples={total}")


# --- criterion 3: complements permuting with A form antichains ----------------


def criterion_3(ctx: AcceptanceContext) -> CriterionResult:
    groups = 0
    pairs = 0
    for entry in ctx.catalog():
        if entry.group.order() > 120:
            continue
        groups += 1
        checked, failures = antichain_suite(
            entry.group, catalog=ctx.subcat(entry))
        pairs += checked
        if failures:
            return CriterionResult(
                3, NAMES[3], False,
                f"{len(failures)} comparable pairs in {entry.name}")
    return CriterionResult(3, NAMES[3], True, f"groups={groups} pairs={pairs}")


# --- criterion 4: the A5 wr S3 reference instance ------------------------------


def criterion_4(ctx: AcceptanceContext) -> CriterionResult:
    S = alternating(5)
    G = symmetric(3)
    H = PermGroup(3, [Perm((1, 0, 2))])
    W = build_kurzweil(S, G, H)
    checks = []
    checks.append(("order", W.U.order() == 1_296_000))
    checks.append(("index", W.U.order() // W.DGbar.order() == 3600))
    checks.append(("core-free-lift", verify_corefree_lift(W)))
    ok_dual, upper = dual_interval_check(W)
    checks.append(("dual-interval", ok_dual))
    checks.append(("upper-is-2-chain",
                   is_isomorphic(upper, chain(2)) is not None))
    diag = diagonal_interval(W)
    checks.append(("diagonal-interval",
                   is_isomorphic(diag, dual(partition_lattice(3))) is not None))
    bad = [name for name, ok in checks if not ok]
    if bad:
        return CriterionResult(4, NAMES[4], False, "failed: " + ",".join(bad))
    report = kurzweil_iterate_size(W, S)
    return CriterionResult(
        4, NAMES[4], True,
        f"checks={len(checks)} iterate-digits={report['digits']}")


# --- criterion 5: parachute gluing -------------------------------------------


def criterion_5(ctx: AcceptanceContext) -> CriterionResult:
    stock = [chain(2), chain(3), mlattice(3), partition_lattice(3)]
    built = 0
    for r in (2, 3, 4):
        for idxs in combinations_with_replacement(range(len(stock)), r):
            panels = [stock[i] for i in idxs]
            P = parachute(panels)
            built += 1
            if P.size != sum(L.size for L in panels) - r + 2:
                return CriterionResult(5, NAMES[5], False,
                                       f"size formula fails for {idxs}")
            atoms = P.atoms()
            if len(atoms) != r:
                return CriterionResult(5, NAMES[5], False,
                                       f"atom count fails for {idxs}")
            # each atom's interval up to the top must match an input panel,
            # with multiplicities, up to isomorphism (Eq(3) and M3 coincide,
            # so indices are canonicalized through cls on both sides)
            def cls(L):
                for k, S in enumerate(stock):
                    if is_isomorphic(L, S) is not None:
                        return k
                return -1
            want = sorted(cls(stock[i]) for i in idxs)
            got = sorted(cls(P.interval(a, P.top)[0]) for a in atoms)
            if want != got:
                return CriterionResult(5, NAMES[5], False,
                                       f"panel intervals fail for {idxs}")
    for k in range(2, 7):
        if is_isomorphic(parachute([chain(2)] * k), mlattice(k)) is None:
            return CriterionResult(5, NAMES[5], False,
                                   f"parachute(2-chain x{k}) != M{k}")
    return CriterionResult(5, NAMES[5], True, f"multisets={built} mk=2..6")


# --- criterion 6: partition lattice sizes against the Bell triangle ----------


def _bell_numbers(n: int) -> list[int]:
    """B_0..B_n via the Bell triangle (pure integer recurrence)."""
    bells = [1]
    row = [1]
    for _ in range(n):
        new = [row[-1]]
        for v in row:
            new.append(new[-1] + v)
        row = new
        bells.append(row[0])
    return bells


def criterion_6(ctx: AcceptanceContext) -> CriterionResult:
    expected = {2: 2, 3: 5, 4: 15, 5: 52, 6: 203, 7: 877}
    bells = _bell_numbers(7)
    for n, val in expected.items():
        if bells[n] != val:
            return CriterionResult(6, NAMES[6], False,
                                   f"Bell triangle disagrees at n={n}")
        if partition_lattice(n).size != val:
            return CriterionResult(6, NAMES[6], False,
                                   f"|Eq({n})| != {val}")
    if is_isomorphic(partition_lattice(3), mlattice(3)) is None:
        return CriterionResult(6, NAMES[6], False, "Eq(3) != M3")
    return CriterionResult(6, NAMES[6], True, "n=2..7 sizes exact, Eq(3)=M3")


# --- criterion 7: property tables vs. Cayley-table brute force ----------------


def _commutes(cay, a: int, b: int) -> bool:
    return cay[a][b] == cay[b][a]


def _oracle_table(cat: SubgroupCatalog) -> dict:
    """Recompute all flags from the subgroup enumeration and Cayley table."""
    tab = cat.table
    cay = tab.cayley
    order = tab.n
    elems = range(order)
    subs = cat.subgroups
    normal = [subs[i] for i in cat.normal_subgroups()]
    nontrivial = [N for N in normal if len(N) > 1]
    minimal = [N for N in nontrivial
               if not any(M < N for M in nontrivial)]

    # derived series over literal element sets
    def derived(S):
        comms = set()
        for a in S:
            for b in S:
                comms.add(cay[cay[cay[tab.inv[a]][tab.inv[b]]][a]][b])
        return tab.closure(tuple(sorted(comms)))

    cur = tab.full
    solvable = True
    while len(cur) > 1:
        nxt = derived(cur)
        if nxt == cur:
            solvable = False
            break
        cur = nxt

    sdi = None if order == 1 else len(minimal) == 1
    triv_cent = all(
        sum(1 for g in elems if all(_commutes(cay, g, x) for x in N)) == 1
        for N in nontrivial)
    no_ab_normal = not any(
        all(_commutes(cay, a, b) for a in N for b in N) for N in nontrivial)

    # alt-or-sym for order <= 24, from classification facts: orders 1, 2, 3
    # are S1, S2, A3; S3 is the only nonabelian group of order 6; A4 is the
    # only group of order 12 without a subgroup of order 6; S4 is the only
    # group of order 24 with trivial center.
    abelian = all(_commutes(cay, a, b) for a in elems for b in elems)
    if order in (1, 2, 3):
        alt_sym = True
    elif order == 6:
        alt_sym = not abelian
    elif order == 12:
        alt_sym = all(len(s) != 6 for s in subs)
    elif order == 24:
        alt_sym = sum(1 for g in elems
                      if all(_commutes(cay, g, x) for x in elems)) == 1
    else:
        alt_sym = False

    return {
        "solvable": solvable,
        "subdirectly_irreducible": sdi,
        "alt_or_sym": alt_sym,
        "trivial_centralizers": triv_cent,
        "no_abelian_normal": no_ab_normal,
    }


def criterion_7(ctx: AcceptanceContext) -> CriterionResult:
    groups = 0
    for entry in ctx.catalog():
        if entry.group.order() > 24:
            continue
        groups += 1
        got = property_table(entry.group)
        want = _oracle_table(ctx.subcat(entry))
        if got != want:
            diff = sorted(k for k in want if got.get(k) != want[k])
            return CriterionResult(
                7, NAMES[7], False,
                f"{entry.name}: " + ",".join(diff))
    return CriterionResult(7, NAMES[7], True, f"groups={groups} flags=5")


# --- criterion 8: representation search recovers known witnesses --------------


def criterion_8(ctx: AcceptanceContext) -> CriterionResult:
    cat = ctx.catalog()
    certified = 0

    def run(L, **kw):
        nonlocal certified
        res = find_representations(L, cat, **kw)
        for w in res.witnesses:
            if not certify(w, L):
                raise AssertionError(f"witness {w.name} failed certify")
            certified += 1
        return res.witnesses

    try:
        m3 = run(mlattice(3), limit=5)
        m4 = run(mlattice(4), limit=5)
        c2 = run(chain(2), core_free_only=True, limit=5)
    except AssertionError as exc:
        return CriterionResult(8, NAMES[8], False, str(exc))
    # Sub(V4) = M3: expect the Klein group over its trivial subgroup
    if not any(w.group.order() == 4 and w.subgroup.order() == 1
               and w.group.is_abelian() for w in m3):
        return CriterionResult(8, NAMES[8], False, "no (V4, 1) witness for M3")
    # Sub(S3) = M4: the only order-6 interval giving M4
    if not any(w.group.order() == 6 and w.subgroup.order() == 1
               and not w.group.is_abelian() for w in m4):
        return CriterionResult(8, NAMES[8], False, "no (S3, 1) witness for M4")
    if not any(w.core_free for w in c2):
        return CriterionResult(8, NAMES[8], False,
                               "no core-free witness for 2-chain")
    return CriterionResult(8, NAMES[8], True, f"certified={certified}")


# --- criterion 9: minimal-normal checks equal all-normal checks ---------------


def criterion_9(ctx: AcceptanceContext) -> CriterionResult:
    groups = 0
    pairs = 0
    for entry in ctx.catalog():
        if entry.group.order() > 120:
            continue
        groups += 1
        cat = ctx.subcat(entry)
        tab, subs = cat.table, cat.subgroups
        cay = tab.cayley
        sizes = [len(fz) for fz in subs]
        order = tab.n
        normal = cat.normal_subgroups()
        nontrivial = [i for i in normal if sizes[i] > 1]
        minimal = [i for i in nontrivial
                   if not any(subs[j] < subs[i] for j in nontrivial)]

        def cent_trivial(i):
            N = subs[i]
            return sum(1 for g in range(order)
                       if all(_commutes(cay, g, x) for x in N)) == 1

        if (all(cent_trivial(i) for i in minimal)
                != all(cent_trivial(i) for i in nontrivial)):
            return CriterionResult(
                9, NAMES[9], False, f"centralizer reduction: {entry.name}")

        # NH is a subgroup when N is normal, so NH = G iff |N||H|/|NnH| = |G|
        def covers(ni, hi):
            return sizes[ni] * sizes[hi] == order * sizes[cat.meet(ni, hi)]

        for hi in range(len(subs)):
            pairs += 1
            if (all(covers(ni, hi) for ni in minimal)
                    != all(covers(ni, hi) for ni in nontrivial)):
                return CriterionResult(
                    9, NAMES[9], False,
                    f"NH reduction: {entry.name} H#{hi}")
    return CriterionResult(9, NAMES[9], True, f"groups={groups} pairs={pairs}")


# --- criterion 10: canonical artifacts are byte-stable ------------------------


def canonical_artifacts() -> dict:
    """Freshly computed canonical JSON pieces, no caching anywhere."""
    G = symmetric(4)
    wit = find_representations(
        mlattice(3), builtin_catalog(max_order=24), limit=1).witnesses[0]
    return {
        "eq5": lattice_json(partition_lattice(5)),
        "parachute": lattice_json(parachute([chain(3), mlattice(3)])),
        "sub_s4": lattice_json(interval_lattice(G, PermGroup(4))),
        "witness": witness_json(wit),
    }


def criterion_10(ctx: AcceptanceContext) -> CriterionResult:
    first = canonical_json(canonical_artifacts()).encode()
    second = canonical_json(canonical_artifacts()).encode()
    if first != second:
        return CriterionResult(10, NAMES[10], False,
                               "artifact bytes differ between runs")
    return CriterionResult(10, NAMES[10], True, f"bytes={len(first)}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def run_all(ctx: AcceptanceContext | None = None) -> list[CriterionResult]:
    ctx = ctx or AcceptanceContext()
    return [fn(ctx) for fn in CRITERIA]


def render(results) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.cid}\t{r.name}\t{status}\t{r.details}")
    failed = sum(1 for r in results if not r.passed)
    lines.append(f"selftest: {'PASS' if failed == 0 else 'FAIL'} "
                 f"({len(results) - failed}/{len(results)})")
    return "\n".join(lines) + "\n"
