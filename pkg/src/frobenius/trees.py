"""Small functionals from spanning trees and their closed-form principal elements.

A directed edge set ``S`` on vertices ``1..n`` whose underlying graph is a
spanning tree gives the functional ``F_S = sum_{(i,j) in S} e_ij^*``.  For
each edge ``s = (i, j)`` the traceless diagonal ``d_s`` is the sum of
``eps_k = e_kk - (1/n) I`` over the vertices ``k`` on the ``i`` side of
``s``; ``D_S = sum_s d_s``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import EdgeNotInSet, HypothesisViolated, NotATree
from .index import Functional, is_frobenius, principal_element
from .lie import MatrixUnit, contains_cartan, diagonal_element

__all__ = [
    "EdgeSet",
    "Theorem5Outcome",
    "validate_tree",
    "small_functional",
    "d_edge",
    "principal_from_tree",
    "path_weight",
    "theorem5_check",
    "random_spanning_tree",
    "increasing_path",
    "d_independent",
]


@dataclass(frozen=True)
class EdgeSet:
    n: int
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))


@dataclass(frozen=True)
class Theorem5Outcome:
    holds: bool
    reason: str

    def __bool__(self):
        return self.holds


def _adjacency(S, skip=None):
    adj = {v: [] for v in range(1, S.n + 1)}
    for e in S.edges:
        if e == skip:
            continue
        i, j = e
        adj[i].append((j, 1))
        adj[j].append((i, -1))
    return adj


def _reach(adj, start):
    """Signed distances from ``start`` along undirected paths."""
    weight = {start: 0}
    stack = [start]
    while stack:
        u = stack.pop()
        for v, sign in adj[u]:
            if v not in weight:
                weight[v] = weight[u] + sign
                stack.append(v)
    return weight


def validate_tree(S):
    if S.n < 1 or len(S.edges) != S.n - 1:
        return False
    for i, j in S.edges:
        if i == j or not (1 <= i <= S.n and 1 <= j <= S.n):
            return False
    return len(_reach(_adjacency(S), 1)) == S.n


def _require_tree(S):
    if not validate_tree(S):
        raise NotATree(f"edge set {S.edges} is not a spanning tree on {S.n} vertices")


def small_functional(S):
    _require_tree(S)
    return Functional.from_terms([(MatrixUnit(i, j), 1) for i, j in S.edges])


def d_edge(S, s):
    s = tuple(s)
    if s not in S.edges:
        raise EdgeNotInSet(f"{s} is not an edge of {S.edges}")
    side = _reach(_adjacency(S, skip=s), s[0])
    share = Fraction(len(side), S.n)
    return tuple((1 - share) if k in side else -share for k in range(1, S.n + 1))


def principal_from_tree(S):
    _require_tree(S)
    total = [Fraction(0)] * S.n
    for s in S.edges:
        for k, x in enumerate(d_edge(S, s)):
            total[k] += x
    return tuple(total)


def path_weight(S, i, j):
    """Forward minus backward edges on the tree path from ``i`` to ``j``."""
    _require_tree(S)
    if i == j:
        raise ValueError("path_weight needs i != j")
    return _reach(_adjacency(S), i)[j]


def theorem5_check(L, S):
    """Check that ``D_S`` is the principal element of ``F_S`` on ``L``.

    Raises ``HypothesisViolated`` when ``L`` misses the diagonal Cartan or
    an edge of ``S``; a degenerate ``F_S`` gives a false outcome instead.
    """
    _require_tree(S)
    if L.ambient_n != S.n or not contains_cartan(L):
        raise HypothesisViolated(f"{L.name} does not contain the Cartan of sl_{S.n}")
    missing = [e for e in S.edges if MatrixUnit(*e) not in L.index_of]
    if missing:
        raise HypothesisViolated(f"edges {missing} are not in {L.name}")
    F = small_functional(S)
    if not is_frobenius(L, F):
        return Theorem5Outcome(False, "F_S is not a Frobenius functional")
    if principal_element(L, F) != diagonal_element(L, principal_from_tree(S)):
        return Theorem5Outcome(False, "principal element differs from D_S")
    return Theorem5Outcome(True, "D_S equals the principal element")


def d_independent(S):
    """Rank of the ``d_s`` equals ``n - 1``."""
    rows = [list(d_edge(S, s)) for s in S.edges]
    return linalg.rank(rows) == S.n - 1


def random_spanning_tree(n, rng):
    """Uniform labelled tree (Pruefer code) with independent edge directions."""
    if isinstance(rng, int):
        rng = random.Random(rng)
    if n == 1:
        return EdgeSet(1, ())
    if n == 2:
        pairs = [(1, 2)]
    else:
        code = [rng.randint(1, n) for _ in range(n - 2)]
        degree = [1] * (n + 1)
        for v in code:
            degree[v] += 1
        pairs = []
        for v in code:
            leaf = next(u for u in range(1, n + 1) if degree[u] == 1)
            pairs.append((leaf, v))
            degree[leaf] -= 1
            degree[v] -= 1
        u, w = (x for x in range(1, n + 1) if degree[x] == 1)
        pairs.append((u, w))
    edges = tuple((a, b) if rng.random() < 0.5 else (b, a) for a, b in pairs)
    return EdgeSet(n, edges)


def increasing_path(n):
    return EdgeSet(n, tuple((k, k + 1) for k in range(1, n)))
