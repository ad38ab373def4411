"""Finite-dimensional Lie algebras given by basis and structure constants.

Three families are built here: ``sl(n)`` and its seaweed (biparabolic)
subalgebras, the semidirect products ``M_{n,p} x| gl_n``, and arbitrary
closed spans of traceless matrices.  Elements are plain coefficient lists
over ``L.basis``.  All indices on labels are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .errors import InvalidParameter, NoAmbient, NotClosed

__all__ = [
    "Cartan",
    "MatrixUnit",
    "Translation",
    "BasisVector",
    "LieAlgebra",
    "sl",
    "seaweed",
    "maximal_parabolic",
    "rais_algebra",
    "span",
    "change_basis",
    "bracket",
    "closure_check",
    "normalizer_in_ambient",
    "is_saturated",
    "contains_cartan",
    "compositions",
    "diagonal_element",
]


@dataclass(frozen=True, order=True)
class Cartan:
    """``h_k = e_kk - e_{k+1,k+1}``."""

    k: int

    def __str__(self):
        return f"h{self.k}"


@dataclass(frozen=True, order=True)
class MatrixUnit:
    i: int
    j: int

    def __str__(self):
        return f"e{self.i},{self.j}"


@dataclass(frozen=True, order=True)
class Translation:
    """Matrix unit of the ``M_{n,p}`` summand in the Rais family."""

    r: int
    c: int

    def __str__(self):
        return f"t{self.r},{self.c}"


@dataclass(frozen=True, order=True)
class BasisVector:
    """Opaque label for custom spans and changed bases."""

    k: int

    def __str__(self):
        return f"y{self.k}"


def _label_matrix(label):
    if isinstance(label, MatrixUnit):
        return {(label.i, label.j): Fraction(1)}
    if isinstance(label, Cartan):
        return {(label.k, label.k): Fraction(1), (label.k + 1, label.k + 1): Fraction(-1)}
    raise TypeError(f"no canonical matrix for {label!r}")


def _commutator(a, b):
    """Commutator of two sparse matrices stored as ``{(i, j): coeff}``."""
    out = {}
    for (i, j), x in a.items():
        for (k, l), y in b.items():
            if j == k:
                out[(i, l)] = out.get((i, l), 0) + x * y
            if l == i:
                out[(k, j)] = out.get((k, j), 0) - x * y
    return {key: v for key, v in out.items() if v}


def _flatten(mat, n):
    v = [Fraction(0)] * (n * n)
    for (i, j), x in mat.items():
        v[(i - 1) * n + (j - 1)] = Fraction(x)
    return v


class LieAlgebra:
    """Basis plus sparse structure table ``[x_a, x_b] = sum_c C[a,b][c] x_c``.

    ``structure`` maps ``(a, b)`` with ``a < b`` to a dict ``{c: coeff}``;
    zero brackets are omitted.  ``realization`` (optional) gives each basis
    vector as a sparse ``n x n`` matrix with ``n = ambient_n``.
    """

    def __init__(self, name, basis, structure, realization=None, ambient_n=0):
        self.name = name
        self.basis = tuple(basis)
        self.structure = structure
        self.realization = tuple(realization) if realization is not None else None
        self.ambient_n = ambient_n if realization is not None else 0
        self.index_of = {label: a for a, label in enumerate(self.basis)}
        self._span = None

    @property
    def dim(self):
        return len(self.basis)

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim})"

    def bracket_basis(self, a, b):
        if a == b:
            return {}
        if a < b:
            return self.structure.get((a, b), {})
        return {c: -x for c, x in self.structure.get((b, a), {}).items()}

    def element(self, terms):
        """Coefficient list from ``{label: coeff}``."""
        v = [Fraction(0)] * self.dim
        for label, x in terms.items():
            v[self.index_of[label]] += Fraction(x)
        return v

    def unit_vector(self, a):
        v = [Fraction(0)] * self.dim
        v[a] = Fraction(1)
        return v

    def _span_coords(self):
        if self._span is None:
            if self.realization is None:
                raise NoAmbient(f"{self.name} has no matrix realization")
            n = self.ambient_n
            self._span = linalg.SpanCoordinates([_flatten(m, n) for m in self.realization])
        return self._span

    def coordinates(self, mat):
        """Coordinates of a sparse matrix in this algebra, or None if outside."""
        return self._span_coords().coordinates(_flatten(mat, self.ambient_n))

    def to_matrix(self, x):
        if self.realization is None:
            raise NoAmbient(f"{self.name} has no matrix realization")
        out = {}
        for coeff, mat in zip(x, self.realization):
            if coeff:
                for key, v in mat.items():
                    out[key] = out.get(key, 0) + coeff * v
        return {key: v for key, v in out.items() if v}

    def is_traceless(self):
        return self.realization is not None and all(
            sum(v for (i, j), v in m.items() if i == j) == 0 for m in self.realization
        )


def bracket(L, x, y):
    """Bilinear extension of the structure table."""
    out = [Fraction(0)] * L.dim
    xs = [(a, c) for a, c in enumerate(x) if c]
    ys = [(b, c) for b, c in enumerate(y) if c]
    for a, ca in xs:
        for b, cb in ys:
            if a == b:
                continue
            for c, v in L.bracket_basis(a, b).items():
                out[c] += ca * cb * v
    return out


def _structure_from_matrices(mats, coords, strict=True):
    """Structure table by commutators; returns ``(table, escaped_pairs)``."""
    table = {}
    escaped = []
    for a, b in combinations(range(len(mats)), 2):
        comm = _commutator(mats[a], mats[b])
        if not comm:
            continue
        c = coords(comm)
        if c is None:
            if strict:
                raise NotClosed(f"bracket of basis vectors {a + 1} and {b + 1} leaves the span")
            escaped.append((a, b))
            continue
        entry = {k: v for k, v in enumerate(c) if v}
        if entry:
            table[(a, b)] = entry
    return table, escaped


def _sl_coords_factory(n, labels):
    """Fast coordinates for spans of canonical sl_n basis labels."""
    pos = {label: k for k, label in enumerate(labels)}

    def coords(mat):
        v = [Fraction(0)] * len(labels)
        diag = [Fraction(0)] * (n + 1)
        for (i, j), x in mat.items():
            if i == j:
                diag[i] += x
            else:
                k = pos.get(MatrixUnit(i, j))
                if k is None:
                    return None
                v[k] += x
        if sum(diag):
            return None
        running = Fraction(0)
        for k in range(1, n):
            running += diag[k]
            if running:
                p = pos.get(Cartan(k))
                if p is None:
                    return None
                v[p] += running
        return v

    return coords


def _sl_subalgebra(name, n, labels):
    mats = [_label_matrix(label) for label in labels]
    table, _ = _structure_from_matrices(mats, _sl_coords_factory(n, labels))
    return LieAlgebra(name, labels, table, mats, n)


def sl(n):
    """``sl_n`` with Cartan basis first, then row-major off-diagonal units."""
    if n < 2:
        raise InvalidParameter(f"sl(n) needs n >= 2, got {n}")
    labels = [Cartan(k) for k in range(1, n)]
    labels += [MatrixUnit(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    return _sl_subalgebra(f"sl({n})", n, labels)


def _block_index(parts):
    idx = []
    for b, size in enumerate(parts):
        idx.extend([b] * size)
    return idx


def _check_composition(parts, field):
    parts = tuple(parts)
    if not parts or any(not isinstance(p, int) or p < 1 for p in parts):
        raise InvalidParameter(f"{field} must be a nonempty list of positive integers: {parts}")
    return parts


def seaweed(top, bottom):
    """Seaweed subalgebra of ``sl_n`` cut out by two compositions of ``n``.

    ``e_ij`` is kept when its row block does not come after its column block
    in ``top`` and does not come before it in ``bottom``.  ``top`` therefore
    controls the upper-triangular part.
    """
    top = _check_composition(top, "top")
    bottom = _check_composition(bottom, "bottom")
    n = sum(top)
    if sum(bottom) != n:
        raise InvalidParameter(f"compositions sum to {n} and {sum(bottom)}")
    bt, bb = _block_index(top), _block_index(bottom)
    labels = [Cartan(k) for k in range(1, n)]
    labels += [
        MatrixUnit(i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j and bt[i - 1] <= bt[j - 1] and bb[i - 1] >= bb[j - 1]
    ]
    name = f"seaweed({','.join(map(str, top))}|{','.join(map(str, bottom))})"
    return _sl_subalgebra(name, n, labels)


def maximal_parabolic(n, i):
    if n < 2 or not 1 <= i <= n - 1:
        raise InvalidParameter(f"maximal_parabolic needs 1 <= i <= n-1, got n={n}, i={i}")
    L = seaweed((i, n - i), (n,))
    L.name = f"p({n},{i})"
    return L


def rais_algebra(n, p):
    """``M_{n,p} x| gl_n`` with ``gl_n`` acting by left multiplication.

    Realized as block matrices ``[[A, X], [0, 0]]`` in ``gl_{n+p}``; this
    realization is not traceless, so sl_n-only operations reject it.
    """
    if n < 1 or p < 1:
        raise InvalidParameter(f"rais_algebra needs n, p >= 1, got n={n}, p={p}")
    labels = [MatrixUnit(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    labels += [Translation(r, c) for r in range(1, n + 1) for c in range(1, p + 1)]
    pos = {label: k for k, label in enumerate(labels)}
    table = {}
    for a, b in combinations(range(len(labels)), 2):
        x, y = labels[a], labels[b]
        out = {}
        if isinstance(x, MatrixUnit) and isinstance(y, MatrixUnit):
            if x.j == y.i:
                k = pos[MatrixUnit(x.i, y.j)]
                out[k] = out.get(k, 0) + 1
            if y.j == x.i:
                k = pos[MatrixUnit(y.i, x.j)]
                out[k] = out.get(k, 0) - 1
        elif isinstance(x, MatrixUnit) and isinstance(y, Translation):
            if x.j == y.r:
                out[pos[Translation(x.i, y.c)]] = 1
        out = {k: Fraction(v) for k, v in out.items() if v}
        if out:
            table[(a, b)] = out
    mats = [
        {(lab.i, lab.j): Fraction(1)} if isinstance(lab, MatrixUnit) else {(lab.r, n + lab.c): Fraction(1)}
        for lab in labels
    ]
    return LieAlgebra(f"rais({n},{p})", labels, table, mats, n + p)


def span(n, elements, check=True, name=None):
    """Lie algebra spanned by sparse traceless ``n x n`` matrices.

    With ``check`` the span must be closed under commutators, else
    ``NotClosed`` is raised.  With ``check=False`` an unclosed span is
    returned anyway so that :func:`closure_check` can report on it.
    """
    mats = [{key: Fraction(v) for key, v in m.items() if v} for m in elements]
    for m in mats:
        if any(not (1 <= i <= n and 1 <= j <= n) for i, j in m):
            raise InvalidParameter(f"matrix entry outside {n}x{n}")
        if sum(v for (i, j), v in m.items() if i == j) != 0:
            raise InvalidParameter("span elements must be traceless")
    try:
        coords = linalg.SpanCoordinates([_flatten(m, n) for m in mats])
    except ValueError:
        raise InvalidParameter("span elements are linearly dependent") from None
    table, _ = _structure_from_matrices(
        mats, lambda m: coords.coordinates(_flatten(m, n)), strict=check
    )
    labels = [BasisVector(k) for k in range(1, len(mats) + 1)]
    L = LieAlgebra(name or f"span(n={n},dim={len(mats)})", labels, table, mats, n)
    L._span = coords
    return L


def change_basis(L, P, name=None):
    """Same algebra in the basis ``y_a = sum_c P[a][c] x_c``."""
    Q = linalg.inverse(P)
    d = L.dim
    rows = [[(c, x) for c, x in enumerate(row) if x] for row in P]
    table = {}
    for a, b in combinations(range(d), 2):
        acc = [Fraction(0)] * d
        for c, pc in rows[a]:
            for e, pe in rows[b]:
                if c == e:
                    continue
                for f, v in L.bracket_basis(c, e).items():
                    acc[f] += pc * pe * v
        if any(acc):
            new = linalg.vecmat(acc, Q)
            entry = {k: v for k, v in enumerate(new) if v}
            if entry:
                table[(a, b)] = entry
    realization = None
    if L.realization is not None:
        realization = [L.to_matrix(row) for row in P]
    labels = [BasisVector(k) for k in range(1, d + 1)]
    return LieAlgebra(name or f"{L.name}@basis", labels, table, realization, L.ambient_n)


def _jacobi_holds(L):
    d = L.dim
    for a, b, c in combinations(range(d), 3):
        total = {}
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            for w, v in L.bracket_basis(x, y).items():
                for u, t in L.bracket_basis(w, z).items():
                    total[u] = total.get(u, 0) + v * t
        if any(total.values()):
            return False
    return True


def closure_check(L):
    """True iff basis brackets stay in the span and Jacobi holds."""
    if L.realization is not None:
        for a, b in combinations(range(L.dim), 2):
            comm = _commutator(L.realization[a], L.realization[b])
            c = L.coordinates(comm) if comm else [Fraction(0)] * L.dim
            if c is None:
                return False
            expected = {k: v for k, v in enumerate(c) if v}
            if expected != L.bracket_basis(a, b):
                return False
    return _jacobi_holds(L)


def _require_sl_ambient(L):
    if L.realization is None or not L.is_traceless():
        raise NoAmbient(f"{L.name} has no realization inside sl_n")


def normalizer_in_ambient(L):
    """``{x in sl_n : [x, L] in L}`` as a Lie algebra over its own basis."""
    _require_sl_ambient(L)
    n = L.ambient_n
    g = sl(n)
    spans = L._span_coords()
    # Column s holds the out-of-span residues of [g_s, l_a] for all a.
    columns = []
    for gm in g.realization:
        col = []
        for lm in L.realization:
            col.extend(spans.residual(_flatten(_commutator(gm, lm), n)))
        columns.append(col)
    system = linalg.transpose(columns)
    kernel = linalg.kernel_basis(system, cols=g.dim)
    mats = [g.to_matrix(v) for v in kernel]
    return span(n, mats, name=f"N({L.name})")


def is_saturated(L):
    return normalizer_in_ambient(L).dim == L.dim


def contains_cartan(L):
    _require_sl_ambient(L)
    n = L.ambient_n
    return all(L.coordinates(_label_matrix(Cartan(k))) is not None for k in range(1, n))


def diagonal_element(L, entries):
    """Element of ``L`` realized by ``diag(entries)``; None if not in ``L``."""
    mat = {(i + 1, i + 1): Fraction(x) for i, x in enumerate(entries) if x}
    return L.coordinates(mat)


def compositions(n):
    """All compositions of ``n`` in lexicographic order."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        out.extend((first,) + rest for rest in compositions(n - first))
    return out
