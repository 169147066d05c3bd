"""File formats: group files, lattice JSON, witness JSON, canonical dumps.

A group file is plain text: a ``degree d`` line followed by one generator
per line in 1-based cycle notation; ``#`` starts a comment.  Lattices are
JSON objects ``{"size": m, "covers": [[lower, upper], ...]}``.  All JSON
emitted by the package goes through :func:`canonical_json` so identical
inputs produce byte-identical files.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .groups import PermGroup
from .lattice import FiniteLattice
from .perms import cycle_string, parse_cycles
from .search import Witness


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "),
                      ensure_ascii=False) + "\n"


# --- groups --------------------------------------------------------------------


def dump_group(G: PermGroup) -> str:
    lines = [f"degree {G.degree}"]
    lines.extend(cycle_string(g) for g in G.generators)
    if not G.generators:
        lines.append("()")
    return "\n".join(lines) + "\n"


def parse_group(text: str) -> PermGroup:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty group file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "degree":
        raise ParseError(f"expected 'degree d' header, got {lines[0]!r}")
    try:
        degree = int(head[1])
    except ValueError:
        raise ParseError(f"bad degree {head[1]!r}") from None
    if degree < 1:
        raise ParseError("degree must be positive")
    gens = [parse_cycles(line, degree) for line in lines[1:]]
    return PermGroup(degree, gens)


def load_group(path) -> PermGroup:
    with open(path, encoding="utf-8") as fh:
        return parse_group(fh.read())


def group_json(G: PermGroup) -> dict:
    return {
        "degree": G.degree,
        "generators": [cycle_string(g) for g in G.generators],
        "order": G.order(),
    }


def group_from_json(obj) -> PermGroup:
    try:
        degree = int(obj["degree"])
        gens = [parse_cycles(s, degree) for s in obj["generators"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad group object: {exc}") from None
    return PermGroup(degree, gens)


# --- lattices ------------------------------------------------------------------


def lattice_json(L: FiniteLattice) -> dict:
    return {"size": L.size, "covers": [list(c) for c in sorted(L.covers)]}


def lattice_from_json(obj) -> FiniteLattice:
    try:
        size = int(obj["size"])
        covers = [(int(a), int(b)) for a, b in obj["covers"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad lattice object: {exc}") from None
    return FiniteLattice.from_covers(size, covers)


def load_lattice(path) -> FiniteLattice:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from None
    return lattice_from_json(obj)


# --- witnesses -----------------------------------------------------------------


def witness_json(w: Witness) -> dict:
    return {
        "name": w.name,
        "group": group_json(w.group),
        "subgroup": group_json(w.subgroup),
        "iso": list(w.iso),
        "core_free": w.core_free,
        "hereditary_core_free": w.hereditary_core_free,
    }


def witness_from_json(obj) -> Witness:
    try:
        return Witness(
            name=str(obj["name"]),
            group=group_from_json(obj["group"]),
            subgroup=group_from_json(obj["subgroup"]),
            iso=tuple(int(i) for i in obj["iso"]),
            core_free=bool(obj["core_free"]),
            hereditary_core_free=bool(obj["hereditary_core_free"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad witness object: {exc}") from None
