"""Permutations of {0..d-1} stored as image tuples.

The product convention is fixed repo-wide as the *right action*:
``(p * q)(x) == q(p(x))``, i.e. apply ``p`` first, then ``q``.
Points are 0-based internally; cycle notation shown to users is 1-based.
"""

from __future__ import annotations

import math
import re

from .errors import DegreeMismatch, NotAPermutation, ParseError


class Perm:
    """An immutable permutation given by its image tuple."""

    __slots__ = ("img",)

    def __init__(self, images):
        img = tuple(images)
        if sorted(img) != list(range(len(img))):
            raise NotAPermutation(f"not a bijection on 0..{len(img) - 1}: {img}")
        object.__setattr__(self, "img", img)

    # construction helpers ------------------------------------------------

    @staticmethod
    def identity(degree: int) -> "Perm":
        return Perm(range(degree))

    @staticmethod
    def from_cycles(degree: int, cycles) -> "Perm":
        """Build a permutation from 0-based cycles, e.g. [(0, 1, 2), (3, 4)]."""
        img = list(range(degree))
        for cyc in cycles:
            for i, pt in enumerate(cyc):
                nxt = cyc[(i + 1) % len(cyc)]
                if not (0 <= pt < degree):
                    raise NotAPermutation(f"point {pt} out of range for degree {degree}")
                img[pt] = nxt
        return Perm(img)

    # basic protocol -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.img)

    def __call__(self, point: int) -> int:
        return self.img[point]

    def __mul__(self, other: "Perm") -> "Perm":
        """Apply self, then other."""
        a, b = self.img, other.img
        if len(a) != len(b):
            raise DegreeMismatch(f"degrees {len(a)} and {len(b)} differ")
        p = object.__new__(Perm)
        object.__setattr__(p, "img", tuple(b[x] for x in a))
        return p

    def inverse(self) -> "Perm":
        inv = [0] * len(self.img)
        for i, x in enumerate(self.img):
            inv[x] = i
        p = object.__new__(Perm)
        object.__setattr__(p, "img", tuple(inv))
        return p

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.img))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def cycles(self):
        """Nontrivial cycles as tuples of 0-based points, smallest point first."""
        seen = [False] * len(self.img)
        out = []
        for i in range(len(self.img)):
            if seen[i] or self.img[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self.img[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.img[j]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        return f"Perm({cycle_string(self)!r}, degree={self.degree})"

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")


def compose(p: Perm, q: Perm) -> Perm:
    """Apply p, then q (the repo-wide right-action convention)."""
    return p * q


def cycle_string(p: Perm) -> str:
    """1-based cycle notation, '()' for the identity."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation such as '(1 2 3)(4 5)'."""
    stripped = text.strip()
    if stripped in ("()", "e", "id"):
        return Perm.identity(degree)
    body = _CYCLE_RE.sub("", stripped)
    if body.strip():
        raise ParseError(f"unbalanced or stray text in cycle notation: {text!r}")
    cycles = []
    for m in _CYCLE_RE.finditer(stripped):
        pts = m.group(1).replace(",", " ").split()
        if not pts:
            continue
        try:
            cyc = tuple(int(s) - 1 for s in pts)
        except ValueError as exc:
            raise ParseError(f"bad cycle {m.group(0)!r}") from exc
        if any(x < 0 or x >= degree for x in cyc):
            raise ParseError(f"point out of range 1..{degree} in {m.group(0)!r}")
        if len(set(cyc)) != len(cyc):
            raise ParseError(f"repeated point in cycle {m.group(0)!r}")
        cycles.append(cyc)
    seen = set()
    for cyc in cycles:
        if seen.intersection(cyc):
            raise ParseError(f"cycles overlap in {text!r}")
        seen.update(cyc)
    return Perm.from_cycles(degree, cycles)
