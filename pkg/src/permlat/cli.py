"""Command-line front end.

Exit codes follow the usual convention for checking tools: 0 on success,
1 when a mathematical check fails (non-isomorphic lattices, a violated
property, a witness that does not certify), 2 on usage or parse errors.
Everything structured goes through canonical JSON so reruns are diffable.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import acceptance
from .actions import interval_lattice
from .catalog import builtin_catalog
from .config import load_config
from .errors import ParseError, PermlatError
from .formats import (
    canonical_json,
    dump_group,
    group_json,
    lattice_json,
    load_group,
    load_lattice,
    witness_from_json,
    witness_json,
)
from .groups import core, is_core_free
from .lattice import (
    chain,
    dual,
    is_isomorphic,
    mlattice,
    parachute,
    partition_lattice,
)
from .props import verify_parachute_consequences
from .search import certify, find_representations
from .subgroups import (
    antichain_suite,
    dedekind_rule_suite,
    interval_bruteforce,
    subgroup_lattice_bruteforce,
)
from .wreath import (
    build_kurzweil,
    dual_interval_check,
    verify_corefree_lift,
)

USAGE_ERROR = 2
CHECK_FAILED = 1


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_lattice(L, args) -> None:
    _emit(canonical_json(lattice_json(L)), getattr(args, "out", None))
    if getattr(args, "dot", None):
        from .hasse import to_dot
        with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(to_dot(L))
    if getattr(args, "fig", None):
        from .hasse import render_figure
        render_figure(L, args.fig)


def _add_lattice_output(p) -> None:
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.add_argument("--dot", help="also write a Graphviz file")
    p.add_argument("--fig", help="also render a Hasse diagram (PNG/PDF)")


# --- subcommand handlers ---------------------------------------------------------


def cmd_order(args) -> int:
    print(load_group(args.group).order())
    return 0


def cmd_core(args) -> int:
    G = load_group(args.group)
    H = load_group(args.subgroup)
    C = core(G, H)
    _emit(dump_group(C), args.out)
    return 0


def cmd_interval(args) -> int:
    G = load_group(args.group)
    H = load_group(args.subgroup)
    L = interval_lattice(G, H)
    if args.oracle:
        slow = interval_bruteforce(G, H)
        if is_isomorphic(L, slow) is None:
            print("oracle mismatch: congruence interval is not isomorphic "
                  "to the brute-force interval", file=sys.stderr)
            return CHECK_FAILED
    _emit_lattice(L, args)
    return 0


def cmd_sublattice(args) -> int:
    G = load_group(args.group)
    L, _subs = subgroup_lattice_bruteforce(G)
    _emit_lattice(L, args)
    return 0


def cmd_lat_iso(args) -> int:
    L1 = load_lattice(args.first)
    L2 = load_lattice(args.second)
    mapping = is_isomorphic(L1, L2)
    if mapping is None:
        print("not isomorphic")
        return CHECK_FAILED
    _emit(canonical_json({"isomorphic": True, "mapping": list(mapping)}),
          args.out)
    return 0


def cmd_lat_dual(args) -> int:
    _emit_lattice(dual(load_lattice(args.lattice)), args)
    return 0


def cmd_lat_parachute(args) -> int:
    panels = [load_lattice(p) for p in args.panels]
    _emit_lattice(parachute(panels), args)
    return 0


def cmd_lat_eqn(args) -> int:
    _emit_lattice(partition_lattice(args.n), args)
    return 0


def cmd_lat_chain(args) -> int:
    _emit_lattice(chain(args.k), args)
    return 0


def cmd_lat_mn(args) -> int:
    _emit_lattice(mlattice(args.k), args)
    return 0


def cmd_kurzweil_build(args) -> int:
    W = build_kurzweil(load_group(args.s), load_group(args.g),
                       load_group(args.h))
    obj = {
        "n": W.n,
        "k": W.k,
        "degree": W.U.degree,
        "order": W.U.order(),
        "index_DGbar": W.U.order() // W.DGbar.order(),
        "U": group_json(W.U),
        "D": group_json(W.D),
        "Gbar": group_json(W.Gbar),
        "DGbar": group_json(W.DGbar),
        "warnings": list(W.warnings),
    }
    _emit(canonical_json(obj), args.out)
    return 0


def cmd_kurzweil_check(args) -> int:
    cfg = load_config(args.config)
    W = build_kurzweil(load_group(args.s), load_group(args.g),
                       load_group(args.h))
    cap = args.index_cap or cfg.coset_index_cap
    lift = verify_corefree_lift(W, index_cap=cap)
    dual_ok, _upper = dual_interval_check(W, index_cap=cap)
    _emit(canonical_json({"core_free_lift": lift, "dual_interval": dual_ok,
                          "order": W.U.order()}), args.out)
    return 0 if (lift and dual_ok) else CHECK_FAILED


def cmd_verify_dedekind(args) -> int:
    ok = True
    report = {}
    for entry in builtin_catalog(max_order=args.max_order):
        checked, failures = dedekind_rule_suite(entry.group)
        report[entry.name] = {"checked": checked, "failures": len(failures)}
        ok = ok and not failures
    _emit(canonical_json(report), args.json)
    return 0 if ok else CHECK_FAILED


def cmd_verify_antichain(args) -> int:
    ok = True
    report = {}
    for entry in builtin_catalog(max_order=args.max_order):
        checked, failures = antichain_suite(entry.group)
        report[entry.name] = {"checked": checked, "failures": len(failures)}
        ok = ok and not failures
    _emit(canonical_json(report), args.json)
    return 0 if ok else CHECK_FAILED


def cmd_verify_parachute(args) -> int:
    G = load_group(args.g)
    H = load_group(args.h)
    rep = verify_parachute_consequences(G, H)
    obj = {"flags": rep.flags, "evidence": rep.evidence}
    _emit(canonical_json(obj), args.json)
    # only a refuted lemma conclusion is a failure; observations and a
    # closed gate are ordinary outcomes
    bad = [k for k, v in rep.flags.items()
           if v is False and not k.startswith("observed_")
           and k != "parachute_gate"]
    return CHECK_FAILED if bad else 0


def cmd_search(args) -> int:
    cfg = load_config(args.config)
    L = load_lattice(args.lattice)
    cat = builtin_catalog(max_order=args.max_order)
    res = find_representations(
        L, cat,
        core_free_only=args.core_free,
        hereditary=args.hereditary,
        max_group_order=args.max_order,
        limit=args.limit or cfg.search_limit,
    )
    obj = {
        "truncated": res.truncated,
        "witnesses": [witness_json(w) for w in res.witnesses],
    }
    _emit(canonical_json(obj), args.out)
    return 0 if res.witnesses else CHECK_FAILED


def cmd_certify(args) -> int:
    import json as _json

    L = load_lattice(args.lattice)
    with open(args.witness, encoding="utf-8") as fh:
        obj = _json.load(fh)
    items = obj["witnesses"] if isinstance(obj, dict) and "witnesses" in obj \
        else [obj]
    if not items:
        print("no witnesses to certify", file=sys.stderr)
        return CHECK_FAILED
    for item in items:
        w = witness_from_json(item)
        if not certify(w, L):
            print(f"witness {w.name} failed certification")
            return CHECK_FAILED
        print(f"witness {w.name} ok")
    return 0


def cmd_selftest(args) -> int:
    ctx = acceptance.AcceptanceContext(threads=args.threads)
    results = acceptance.run_all(ctx)
    text = acceptance.render(results)
    sys.stdout.write(text)
    if args.report:
        os.makedirs(args.report, exist_ok=True)
        with open(os.path.join(args.report, "report.tsv"), "w",
                  encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        with open(os.path.join(args.report, "artifacts.json"), "w",
                  encoding="utf-8", newline="\n") as fh:
            fh.write(canonical_json(acceptance.canonical_artifacts()))
        from .hasse import render_figure
        render_figure(partition_lattice(4),
                      os.path.join(args.report, "eq4.png"),
                      title="Eq(4)")
        render_figure(parachute([chain(3), mlattice(3), partition_lattice(3)]),
                      os.path.join(args.report, "parachute.png"),
                      title="parachute(3-chain, M3, Eq(3))")
    return 0 if all(r.passed for r in results) else CHECK_FAILED


# --- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="permlat",
        description="finite permutation groups, subgroup intervals, and "
                    "finite lattices")
    ap.add_argument("--config", help="config file (also $PERMLAT_CONFIG)")
    ap.add_argument("--threads", type=int, default=1,
                    help="worker count for sweeps; 1 forces serial")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="order of a group file")
    p.add_argument("group")
    p.set_defaults(fn=cmd_order)

    p = sub.add_parser("core", help="largest normal subgroup of G inside H")
    p.add_argument("group")
    p.add_argument("subgroup")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_core)

    p = sub.add_parser("interval",
                       help="the lattice [H, G] via the coset congruence "
                            "lattice")
    p.add_argument("group")
    p.add_argument("subgroup")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against subgroup enumeration")
    _add_lattice_output(p)
    p.set_defaults(fn=cmd_interval)

    p = sub.add_parser("sublattice",
                       help="full subgroup lattice by enumeration")
    p.add_argument("group")
    _add_lattice_output(p)
    p.set_defaults(fn=cmd_sublattice)

    lat = sub.add_parser("lat", help="lattice constructions and comparisons")
    latsub = lat.add_subparsers(dest="lat_command", required=True)

    p = latsub.add_parser("iso", help="isomorphism test for two lattice files")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_lat_iso)

    p = latsub.add_parser("dual", help="order-dual of a lattice file")
    p.add_argument("lattice")
    _add_lattice_output(p)
    p.set_defaults(fn=cmd_lat_dual)

    p = latsub.add_parser("parachute",
                          help="glue panel lattices below a common top")
    p.add_argument("panels", nargs="+")
    _add_lattice_output(p)
    p.set_defaults(fn=cmd_lat_parachute)

    p = latsub.add_parser("eqn", help="partition lattice Eq(n)")
    p.add_argument("n", type=int)
    _add_lattice_output(p)
    p.set_defaults(fn=cmd_lat_eqn)

    p = latsub.add_parser("chain", help="k-element chain")
    p.add_argument("k", type=int)
    _add_lattice_output(p)
    p.set_defaults(fn=cmd_lat_chain)

    p = latsub.add_parser("mn", help="height-2 lattice M_k with k atoms")
    p.add_argument("k", type=int)
    _add_lattice_output(p)
    p.set_defaults(fn=cmd_lat_mn)

    kz = sub.add_parser("kurzweil",
                        help="wreath-product construction over a coset "
                             "action")
    kzsub = kz.add_subparsers(dest="kurzweil_command", required=True)

    p = kzsub.add_parser("build", help="build U = S^n x| G and named "
                                       "subgroups")
    p.add_argument("--s", required=True, help="base group file")
    p.add_argument("--g", required=True, help="top group file")
    p.add_argument("--h", required=True, help="subgroup file (H <= G)")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_kurzweil_build)

    p = kzsub.add_parser("check", help="verify core-free lift and dual "
                                       "interval")
    p.add_argument("--s", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--index-cap", type=int)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_kurzweil_check)

    vf = sub.add_parser("verify", help="exhaustive property suites")
    vfsub = vf.add_subparsers(dest="verify_command", required=True)

    p = vfsub.add_parser("dedekind",
                         help="A(CnB) = ACnB and (CnB)A = CAnB over the "
                              "catalog")
    p.add_argument("--max-order", type=int, default=60)
    p.add_argument("--json", help="write the per-group report here")
    p.set_defaults(fn=cmd_verify_dedekind)

    p = vfsub.add_parser("antichain",
                         help="complements permuting with A are pairwise "
                              "incomparable")
    p.add_argument("--max-order", type=int, default=120)
    p.add_argument("--json")
    p.set_defaults(fn=cmd_verify_antichain)

    p = vfsub.add_parser("parachute",
                         help="group consequences of a parachute-shaped "
                              "interval")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--json")
    p.set_defaults(fn=cmd_verify_parachute)

    p = sub.add_parser("search",
                       help="find (G, H) in the catalog with [H, G] "
                            "isomorphic to a lattice")
    p.add_argument("--lattice", required=True)
    p.add_argument("--core-free", action="store_true")
    p.add_argument("--hereditary", action="store_true")
    p.add_argument("--max-order", type=int)
    p.add_argument("--limit", type=int)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("certify", help="re-derive and validate a witness")
    p.add_argument("--witness", required=True)
    p.add_argument("--lattice", required=True)
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("selftest", help="run the full acceptance suite")
    p.add_argument("--report", metavar="DIR",
                   help="also write a TSV report, canonical artifacts, and "
                        "Hasse figures")
    p.set_defaults(fn=cmd_selftest)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep both
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (ParseError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except PermlatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
