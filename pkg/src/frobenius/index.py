"""The form ``B_F(x, y) = F([x, y])``, indices, and principal elements."""

from __future__ import annotations

import random
from dataclasses import astuple, dataclass
from fractions import Fraction

from . import linalg
from .errors import NotFrobenius, NotFrobeniusOrUnlucky
from .lie import bracket

__all__ = [
    "Functional",
    "IndexReport",
    "bform_matrix",
    "index_of_functional",
    "generic_index",
    "is_frobenius",
    "random_functional",
    "find_frobenius_functional",
    "sample_frobenius_functionals",
    "principal_element",
]


def _term_key(term):
    # Labels of different kinds do not compare, so order by kind first.
    label = term[0]
    return type(label).__name__, astuple(label)


@dataclass(frozen=True)
class Functional:
    """Sparse functional ``sum c * label^*`` over an algebra's dual basis."""

    terms: tuple  # ((label, Fraction), ...) with nonzero coefficients

    @classmethod
    def from_terms(cls, terms):
        items = terms.items() if isinstance(terms, dict) else terms
        merged = {}
        for label, c in items:
            merged[label] = merged.get(label, 0) + Fraction(c)
        return cls(tuple(sorted(((k, v) for k, v in merged.items() if v), key=_term_key)))

    @classmethod
    def from_vector(cls, L, v):
        return cls.from_terms((L.basis[a], c) for a, c in enumerate(v) if c)

    def vector(self, L):
        v = [Fraction(0)] * L.dim
        for label, c in self.terms:
            try:
                v[L.index_of[label]] += c
            except KeyError:
                raise KeyError(f"{label} is not a basis label of {L.name}") from None
        return v

    def __call__(self, L, x):
        return sum((c * x[L.index_of[label]] for label, c in self.terms), Fraction(0))


@dataclass(frozen=True)
class IndexReport:
    dim: int
    index: int
    witness: Functional
    trials: int
    seed: int


def bform_matrix(L, F):
    phi = F.vector(L) if isinstance(F, Functional) else F
    d = L.dim
    m = [[Fraction(0)] * d for _ in range(d)]
    for (a, b), entry in L.structure.items():
        val = sum((phi[c] * x for c, x in entry.items()), Fraction(0))
        m[a][b] = val
        m[b][a] = -val
    return m


def index_of_functional(L, F):
    """Kernel dimension of ``B_F`` for this one functional."""
    return L.dim - linalg.rank(bform_matrix(L, F))


def is_frobenius(L, F):
    return index_of_functional(L, F) == 0


def random_functional(L, seed):
    """Integer coefficients drawn uniformly from ``[-2 dim, 2 dim]``.

    The generator is Python's ``random.Random`` (MT19937) seeded with
    ``seed``; callers derive per-trial seeds as ``seed + trial``.
    """
    rng = random.Random(seed)
    bound = 2 * L.dim
    return Functional.from_vector(L, [rng.randint(-bound, bound) for _ in range(L.dim)])


def generic_index(L, trials=5, seed=0):
    """Minimum kernel dimension over ``trials`` seeded random functionals.

    Every trial is evaluated; the witness is the first functional attaining
    the minimum.  The sampled value is an upper bound for the true index
    and equals it unless every sample landed in a proper subvariety.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    best = None
    for t in range(trials):
        F = random_functional(L, seed + t)
        k = index_of_functional(L, F)
        if (k - L.dim) % 2:
            raise AssertionError("skew form with kernel of the wrong parity")
        if best is None or k < best[0]:
            best = (k, F)
    return IndexReport(L.dim, best[0], best[1], trials, seed)


def find_frobenius_functional(L, max_attempts=50, seed=0):
    for t in range(max_attempts):
        F = random_functional(L, seed + t)
        if is_frobenius(L, F):
            return F
    raise NotFrobeniusOrUnlucky(
        f"no Frobenius functional on {L.name} in {max_attempts} attempts (seed={seed})"
    )


def sample_frobenius_functionals(L, count, seed=0, max_attempts=50):
    """``count`` distinct Frobenius functionals from consecutive seeds."""
    found = []
    for t in range(max_attempts):
        F = random_functional(L, seed + t)
        if F not in found and is_frobenius(L, F):
            found.append(F)
            if len(found) == count:
                return found
    raise NotFrobeniusOrUnlucky(
        f"found {len(found)} of {count} Frobenius functionals on {L.name} in {max_attempts} attempts"
    )


def principal_element(L, F):
    """The unique ``x`` with ``F([x, y]) = F(y)`` for every ``y`` in ``L``."""
    phi = F.vector(L) if isinstance(F, Functional) else list(F)
    m = bform_matrix(L, phi)
    try:
        x = linalg.solve_row(phi, m)
    except linalg.SingularMatrix:
        raise NotFrobenius(f"B_F is degenerate on {L.name}") from None
    for b in range(L.dim):
        val = sum((p * c for p, c in zip(phi, bracket(L, x, L.unit_vector(b)))), Fraction(0))
        if val != phi[b]:
            raise AssertionError("principal element failed its defining identity")
    return x
