"""Hasse diagram output: Graphviz DOT text and matplotlib figures."""

from __future__ import annotations

from .lattice import FiniteLattice


def _ranks(L: FiniteLattice) -> list[int]:
    """Longest-chain-from-bottom rank of every element."""
    order = sorted(range(L.size), key=lambda i: bin(L.down[i]).count("1"))
    rank = [0] * L.size
    for b in order:
        for a, bb in L.covers:
            if bb == b:
                rank[b] = max(rank[b], rank[a] + 1)
    return rank


def _label(L: FiniteLattice, i: int) -> str:
    if L.labels is not None:
        return str(L.labels[i])
    return str(i)


def to_dot(L: FiniteLattice, name: str = "lattice") -> str:
    lines = [f"graph {name} {{", "  rankdir=BT;",
             "  node [shape=circle, width=0.25, fixedsize=true];"]
    for i in range(L.size):
        lines.append(f'  n{i} [label="{_label(L, i)}"];')
    for a, b in sorted(L.covers):
        lines.append(f"  n{a} -- n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_figure(L: FiniteLattice, path: str, title: str | None = None):
    """Draw the Hasse diagram to an image file (format from the extension)."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rank = _ranks(L)
    levels: dict[int, list[int]] = {}
    for i in range(L.size):
        levels.setdefault(rank[i], []).append(i)
    pos = {}
    for r, members in levels.items():
        members.sort()
        for k, i in enumerate(members):
            pos[i] = (k - (len(members) - 1) / 2.0, r)
    fig, ax = plt.subplots(figsize=(max(4, L.size ** 0.5), max(3, max(rank) + 1)))
    for a, b in L.covers:
        (xa, ya), (xb, yb) = pos[a], pos[b]
        ax.plot([xa, xb], [ya, yb], color="0.6", linewidth=1, zorder=1)
    xs = [pos[i][0] for i in range(L.size)]
    ys = [pos[i][1] for i in range(L.size)]
    ax.scatter(xs, ys, s=160, color="white", edgecolors="black", zorder=2)
    for i in range(L.size):
        ax.annotate(_label(L, i), pos[i], ha="center", va="center",
                    fontsize=7, zorder=3)
    if title:
        ax.set_title(title)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
