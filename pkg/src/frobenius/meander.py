"""Meander graphs of seaweed subalgebras of sl_n and their index."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameter

__all__ = [
    "MeanderGraph",
    "ComponentCount",
    "build_meander",
    "count_components",
    "meander_index_sl",
    "to_dot",
]


@dataclass(frozen=True)
class MeanderGraph:
    n: int
    top_arcs: frozenset
    bottom_arcs: frozenset


@dataclass(frozen=True)
class ComponentCount:
    cycles: int
    paths: int


def _block_arcs(parts):
    arcs = set()
    start = 1
    for size in parts:
        left, right = start, start + size - 1
        while left < right:
            arcs.add((left, right))
            left += 1
            right -= 1
        start += size
    return frozenset(arcs)


def build_meander(top, bottom):
    """Nested arcs ``(l, r), (l+1, r-1), ...`` inside every block.

    >>> g = build_meander((4,), (2, 2))
    >>> sorted(g.top_arcs), sorted(g.bottom_arcs)
    ([(1, 4), (2, 3)], [(1, 2), (3, 4)])
    """
    top, bottom = tuple(top), tuple(bottom)
    if any(p < 1 for p in top + bottom) or not top or not bottom:
        raise InvalidParameter("compositions must have positive parts")
    if sum(top) != sum(bottom):
        raise InvalidParameter(f"compositions sum to {sum(top)} and {sum(bottom)}")
    return MeanderGraph(sum(top), _block_arcs(top), _block_arcs(bottom))


def count_components(g):
    # Every vertex has degree <= 2, so each component is a cycle or a path.
    adj = {v: [] for v in range(1, g.n + 1)}
    for a, b in list(g.top_arcs) + list(g.bottom_arcs):
        adj[a].append(b)
        adj[b].append(a)
    seen = set()
    cycles = paths = 0
    for v in range(1, g.n + 1):
        if v in seen:
            continue
        stack = [v]
        seen.add(v)
        nodes = degree = 0
        while stack:
            u = stack.pop()
            nodes += 1
            degree += len(adj[u])
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if degree // 2 == nodes:
            cycles += 1
        else:
            paths += 1
    return ComponentCount(cycles, paths)


def meander_index_sl(top, bottom):
    """Index of the seaweed as ``2 * cycles + paths - 1``."""
    cc = count_components(build_meander(top, bottom))
    return 2 * cc.cycles + cc.paths - 1


def to_dot(g):
    lines = [
        "graph meander {",
        "  rankdir=LR;",
        "  node [shape=circle];",
        "  { rank=same; " + " ".join(f"{v};" for v in range(1, g.n + 1)) + " }",
    ]
    for a, b in sorted(g.top_arcs):
        lines.append(f'  {a} -- {b} [class="top", tailport=n, headport=n];')
    for a, b in sorted(g.bottom_arcs):
        lines.append(f'  {a} -- {b} [class="bottom", tailport=s, headport=s, style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"
