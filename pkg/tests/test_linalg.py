from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from frobenius import linalg
from frobenius.errors import SingularMatrix

F = Fraction

SL2_FORM = [[0, 2, 0], [-2, 0, 0], [0, 0, 0]]

# B_F of p(3,1) over (h1, h2, e12, e13, e23, e32) with F = e12* + e23*,
# entries F([x_a, x_b]) worked out from matrix commutators.
P31_FORM = [
    [0, 0, 2, 0, -1, 0],
    [0, 0, -1, 0, 2, 0],
    [-2, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1],
    [1, -2, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0],
]


def rationals(bound=6):
    return st.builds(F, st.integers(-bound, bound), st.integers(1, 4))


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(rationals(), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def square_matrices(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(rationals(), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def skew_matrices(max_n=6):
    def build(n, entries):
        m = [[F(0)] * n for _ in range(n)]
        it = iter(entries)
        for a in range(n):
            for b in range(a + 1, n):
                m[a][b] = next(it)
                m[b][a] = -m[a][b]
        return m

    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(rationals(3), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
            lambda e: build(n, e)
        )
    )


@pytest.mark.parametrize(
    "m, expected",
    [([[0, 2], [-2, 0]], 2), ([[0] * 3] * 3, 0), (SL2_FORM, 2), (P31_FORM, 6)],
)
def test_rank_examples(m, expected):
    assert linalg.rank(m) == expected


def test_kernel_examples():
    assert linalg.kernel_basis([[0, 2], [-2, 0]]) == []
    assert linalg.kernel_basis(linalg.identity(2)) == []
    (v,) = linalg.kernel_basis(SL2_FORM)
    assert v == [0, 0, 1]


def test_inverse_examples():
    assert linalg.inverse([[0, 2], [-2, 0]]) == [[0, F(-1, 2)], [F(1, 2), 0]]
    assert linalg.inverse(linalg.identity(3)) == linalg.identity(3)
    inv = linalg.inverse(P31_FORM)
    assert linalg.matmul(P31_FORM, inv) == linalg.identity(6)
    assert linalg.is_skew(inv)
    assert inv == [[F(x) for x in row] for row in sympy.Matrix(P31_FORM).inv().tolist()]


def test_inverse_singular():
    with pytest.raises(SingularMatrix):
        linalg.inverse(SL2_FORM)


def test_solve_row_examples():
    m = [[0, 2], [-2, 0]]
    assert linalg.solve_row([0, 1], m) == [F(1, 2), 0]
    assert linalg.solve_row([0, 0], m) == [0, 0]
    for a in range(6):
        unit = [int(a == b) for b in range(6)]
        assert linalg.solve_row(P31_FORM[a], P31_FORM) == unit
    with pytest.raises(SingularMatrix):
        linalg.solve_row([1, 0, 0], SL2_FORM)


@given(matrices())
def test_rank_matches_sympy_and_transpose(m):
    r = linalg.rank(m)
    assert r == sympy.Matrix(m).rank()
    assert r == linalg.rank(linalg.transpose(m))
    assert r == len(linalg.rref(m)[0])


@given(matrices())
def test_kernel_is_exact_and_complete(m):
    basis = linalg.kernel_basis(m)
    assert len(basis) == len(m[0]) - linalg.rank(m)
    for v in basis:
        assert not any(linalg.matvec(m, v))


@given(square_matrices())
def test_inverse_and_solve_row(m):
    if linalg.rank(m) < len(m):
        with pytest.raises(SingularMatrix):
            linalg.inverse(m)
        return
    inv = linalg.inverse(m)
    assert linalg.matmul(m, inv) == linalg.identity(len(m))
    assert linalg.inverse(inv) == m
    v = [F(k + 1, 3) for k in range(len(m))]
    assert linalg.vecmat(linalg.solve_row(v, m), m) == v


@settings(max_examples=60)
@given(skew_matrices())
def test_skew_forms_have_even_rank(m):
    r = linalg.rank(m)
    assert r % 2 == 0
    if len(m) % 2:
        assert r < len(m)
    if r == len(m):
        assert linalg.is_skew(linalg.inverse(m))


def test_span_coordinates():
    sc = linalg.SpanCoordinates([[1, 0, 1], [0, 2, 0]])
    assert sc.coordinates([3, 4, 3]) == [3, 2]
    assert sc.coordinates([1, 0, 0]) is None
    assert sc.residual([1, 0, 0]) != [0, 0, 0]
    with pytest.raises(ValueError):
        linalg.SpanCoordinates([[1, 1], [2, 2]])
