"""Eigenvalues and eigenspaces of ``ad`` of a principal element.

The spectrum is found by scanning integers ``k`` in ``[-dim, dim]`` and
taking exact kernels of ``ad x - k I``.  When the multiplicities found this
way add up to ``dim`` the operator is diagonalizable with integer
eigenvalues, so the scan itself certifies semisimplicity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import NotFrobenius
from .index import Functional, bform_matrix, generic_index, principal_element, sample_frobenius_functionals
from .lie import bracket

__all__ = [
    "SpectrumReport",
    "ad_matrix",
    "integer_spectrum",
    "lemma1_check",
    "duality_check",
    "spectrum_invariance_check",
    "generation_check",
    "is_unbroken",
]


@dataclass
class SpectrumReport:
    eigenvalues: dict = field(default_factory=dict)  # int -> multiplicity
    eigenspaces: dict = field(default_factory=dict)  # int -> list of vectors
    certified_semisimple: bool = False

    def dim_of(self, lam):
        return self.eigenvalues.get(lam, 0)


def ad_matrix(L, x):
    """Matrix of ``y -> [x, y]``; column ``b`` holds ``[x, x_b]``."""
    cols = [bracket(L, x, L.unit_vector(b)) for b in range(L.dim)]
    return linalg.transpose(cols) if cols else []


def integer_spectrum(L, fhat):
    ad = ad_matrix(L, fhat)
    d = L.dim
    report = SpectrumReport()
    total = 0
    for k in range(-d, d + 1):
        if total == d:
            break
        shifted = [[x - k if a == b else x for b, x in enumerate(row)] for a, row in enumerate(ad)]
        nullity = d - linalg.rank(shifted)
        if nullity:
            report.eigenvalues[k] = nullity
            report.eigenspaces[k] = linalg.kernel_basis(shifted)
            total += nullity
    report.certified_semisimple = total == d
    return report


def is_unbroken(report):
    keys = sorted(report.eigenvalues)
    return bool(keys) and keys == list(range(keys[0], keys[-1] + 1))


def _phi(L, F):
    return F.vector(L) if isinstance(F, Functional) else list(F)


def lemma1_check(L, F, report):
    """``F`` vanishes on every eigenspace other than the 1-eigenspace."""
    phi = _phi(L, F)
    for lam, vectors in report.eigenspaces.items():
        if lam == 1:
            continue
        for v in vectors:
            if sum((p * c for p, c in zip(phi, v)), Fraction(0)):
                return False
    return True


def duality_check(L, F, report):
    """``f_lam`` and ``f_{1-lam}`` have equal dimension and pair perfectly."""
    m = bform_matrix(L, _phi(L, F))
    for lam, left in report.eigenspaces.items():
        right = report.eigenspaces.get(1 - lam, [])
        if len(left) != len(right):
            return False
        mv = [linalg.matvec(m, v) for v in right]
        block = [[sum((x * y for x, y in zip(u, w)), Fraction(0)) for w in mv] for u in left]
        if linalg.rank(block) != len(left):
            return False
    return True


def spectrum_invariance_check(L, trials=3, seed=0):
    """Eigenvalue multisets agree across ``trials`` distinct Frobenius functionals."""
    if generic_index(L, seed=seed).index != 0:
        raise NotFrobenius(f"{L.name} is not Frobenius")
    spectra = []
    for F in sample_frobenius_functionals(L, trials, seed=seed):
        report = integer_spectrum(L, principal_element(L, F))
        spectra.append((report.certified_semisimple, dict(sorted(report.eigenvalues.items()))))
    return all(s == spectra[0] for s in spectra)


def _generated_dim(L, generators):
    """Dimension of the subalgebra generated by ``generators``."""
    if not generators:
        return 0
    basis = []
    # Brackets with dependent vectors add nothing new, so only fresh ones recurse.
    layer = list(generators)
    while layer:
        fresh = []
        for v in layer:
            if linalg.rank(basis + [v]) > len(basis):
                basis.append(v)
                fresh.append(v)
        layer = [bracket(L, g, v) for g in generators for v in fresh]
        layer = [v for v in layer if any(v)]
    return len(basis)


def generation_check(L, report):
    """Whether ``f_1`` generates ``f_+`` and ``f_{-1}`` generates ``f_-``."""
    pos = sum(m for lam, m in report.eigenvalues.items() if lam > 0)
    neg = sum(m for lam, m in report.eigenvalues.items() if lam < 0)
    plus = _generated_dim(L, report.eigenspaces.get(1, [])) == pos
    minus = _generated_dim(L, report.eigenspaces.get(-1, [])) == neg
    return plus, minus
