"""Classical r-matrices from Frobenius functionals and the CYBE residual.

Tensors live in ``gl_n^{(x)k}`` and are stored sparsely with keys that are
tuples of matrix units ``(i, j)`` (1-based, diagonal units allowed).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import NoAmbient, NotFrobenius
from .index import Functional, bform_matrix

__all__ = [
    "Tensor",
    "r_matrix",
    "cybe_residual",
    "is_cybe_solution",
    "flip",
]


@dataclass(frozen=True)
class Tensor:
    """Sparse element of the ``k``-fold tensor power of ``gl_n``."""

    n: int
    terms: dict

    @classmethod
    def build(cls, n, terms):
        return cls(n, {key: Fraction(v) for key, v in sorted(terms.items()) if v})

    @property
    def order(self):
        return len(next(iter(self.terms))) if self.terms else 0

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.n == other.n and self.terms == other.terms

    def __neg__(self):
        return Tensor(self.n, {k: -v for k, v in self.terms.items()})

    def to_json(self):
        return [
            {"labels": [list(u) for u in key], "c": _frac(v)}
            for key, v in sorted(self.terms.items())
        ]


def _frac(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def flip(r):
    return Tensor.build(r.n, {(b, a): v for (a, b), v in r.terms.items()})


def r_matrix(L, F):
    """``sum_{a,b} (M^-1)_{ab} x_a (x) x_b`` with ``M`` the matrix of ``B_F``."""
    if L.realization is None:
        raise NoAmbient(f"{L.name} has no matrix realization")
    phi = F.vector(L) if isinstance(F, Functional) else list(F)
    try:
        minv = linalg.inverse(bform_matrix(L, phi))
    except linalg.SingularMatrix:
        raise NotFrobenius(f"B_F is degenerate on {L.name}") from None
    terms = defaultdict(Fraction)
    mats = L.realization
    for a, row in enumerate(minv):
        for b, coeff in enumerate(row):
            if not coeff:
                continue
            for u, x in mats[a].items():
                for w, y in mats[b].items():
                    terms[(u, w)] += coeff * x * y
    return Tensor.build(L.ambient_n, terms)


def _bracket_terms(items, slot_a, slot_b, out, place):
    """Accumulate ``sum r_p r_q [p[slot_a], q[slot_b]]`` into ``out``.

    ``place(p, q, unit)`` builds the 3-key holding the bracketed unit.
    ``[e_ij, e_kl] = delta_jk e_il - delta_li e_kj``, so partners are looked
    up by row and by column instead of scanning every pair.
    """
    by_row = defaultdict(list)
    by_col = defaultdict(list)
    for q, v in items:
        w = q[slot_b]
        by_row[w[0]].append((q, v))
        by_col[w[1]].append((q, v))
    for p, vp in items:
        i, j = p[slot_a]
        for q, vq in by_row.get(j, ()):
            out[place(p, q, (i, q[slot_b][1]))] += vp * vq
        for q, vq in by_col.get(i, ()):
            out[place(p, q, (q[slot_b][0], j))] -= vp * vq


def cybe_residual(r):
    """``[r12, r13] + [r12, r23] + [r13, r23]`` expanded in matrix units."""
    items = list(r.terms.items())
    out = defaultdict(Fraction)
    # [r12, r13] = sum [a, c] (x) b (x) d
    _bracket_terms(items, 0, 0, out, lambda p, q, unit: (unit, p[1], q[1]))
    # [r12, r23] = sum a (x) [b, c] (x) d
    _bracket_terms(items, 1, 0, out, lambda p, q, unit: (p[0], unit, q[1]))
    # [r13, r23] = sum a (x) c (x) [b, d]
    _bracket_terms(items, 1, 1, out, lambda p, q, unit: (p[0], q[0], unit))
    return Tensor.build(r.n, out)


def is_cybe_solution(r):
    return cybe_residual(r).is_zero()
