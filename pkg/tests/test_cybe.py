import random
from fractions import Fraction

import pytest

from frobenius import lie
from frobenius.cybe import Tensor, cybe_residual, flip, is_cybe_solution, r_matrix
from frobenius.errors import NoAmbient, NotFrobenius, SingularMatrix
from frobenius.index import Functional, find_frobenius_functional
from frobenius.lie import MatrixUnit as E
from frobenius.meander import meander_index_sl

F = Fraction
half = F(1, 2)


def unit_matrix(n, u):
    m = [[F(0)] * n for _ in range(n)]
    m[u[0] - 1][u[1] - 1] = F(1)
    return m


def kron(a, b):
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def dense_add(acc, m, c):
    for i, row in enumerate(m):
        for j, x in enumerate(row):
            if x:
                acc[i][j] += c * x


def dense_mul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col) if x), F(0)) for col in bt] for row in a]


def dense_residual(r):
    """Independent oracle: build r12, r13, r23 as n^3 x n^3 matrices."""
    n = r.n
    size = n**3
    ident = [[F(int(i == j)) for j in range(n)] for i in range(n)]
    r12 = [[F(0)] * size for _ in range(size)]
    r13 = [[F(0)] * size for _ in range(size)]
    r23 = [[F(0)] * size for _ in range(size)]
    for (u, w), c in r.terms.items():
        a, b = unit_matrix(n, u), unit_matrix(n, w)
        dense_add(r12, kron(kron(a, b), ident), c)
        dense_add(r13, kron(kron(a, ident), b), c)
        dense_add(r23, kron(kron(ident, a), b), c)
    out = [[F(0)] * size for _ in range(size)]
    for x, y in [(r12, r13), (r12, r23), (r13, r23)]:
        dense_add(out, dense_mul(x, y), 1)
        dense_add(out, dense_mul(y, x), -1)
    return out


def dense_of(t):
    n = t.n
    size = n**3
    out = [[F(0)] * size for _ in range(size)]
    for (u, v, w), c in t.terms.items():
        dense_add(out, kron(kron(unit_matrix(n, u), unit_matrix(n, v)), unit_matrix(n, w)), c)
    return out


BOREL_R = {((1, 1), (1, 2)): -half, ((2, 2), (1, 2)): half, ((1, 2), (1, 1)): half, ((1, 2), (2, 2)): -half}


def test_borel_r_matrix():
    L = lie.maximal_parabolic(2, 1)
    r = r_matrix(L, Functional.from_terms({E(1, 2): 1}))
    assert r == Tensor.build(2, BOREL_R)
    assert flip(r) == -r
    assert r.order == 2
    assert is_cybe_solution(r)


def test_p31_r_matrix():
    L = lie.maximal_parabolic(3, 1)
    r = r_matrix(L, Functional.from_terms({E(1, 2): 1, E(2, 3): 1}))
    assert 0 < len(r.terms) <= 36
    assert flip(r) == -r
    assert is_cybe_solution(r)


def test_r_matrix_errors():
    with pytest.raises(NotFrobenius):
        r_matrix(lie.sl(2), Functional.from_terms({E(1, 2): 1}))
    with pytest.raises(NotFrobenius):
        r_matrix(lie.maximal_parabolic(3, 1), Functional.from_terms({E(1, 2): 1}))
    bare = lie.LieAlgebra("bare", lie.maximal_parabolic(2, 1).basis, lie.maximal_parabolic(2, 1).structure)
    with pytest.raises(NoAmbient):
        r_matrix(bare, Functional.from_terms({E(1, 2): 1}))


def test_residual_examples():
    assert cybe_residual(Tensor.build(2, {})).is_zero()
    assert is_cybe_solution(Tensor.build(2, {((1, 1), (1, 1)): 1, ((1, 1), (2, 2)): 3}))
    res = cybe_residual(Tensor.build(2, {((1, 2), (2, 1)): 1}))
    assert res.terms == {((1, 2), (1, 1), (2, 1)): -1, ((1, 2), (2, 2), (2, 1)): 1}
    assert not is_cybe_solution(Tensor.build(2, {((1, 2), (2, 1)): 1}))


def test_to_json_sorted():
    r = Tensor.build(2, BOREL_R)
    out = r.to_json()
    assert out[0] == {"labels": [[1, 1], [1, 2]], "c": "-1/2"}
    assert [d["labels"] for d in out] == sorted(d["labels"] for d in out)


def random_tensor(rng, n, count):
    units = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    terms = {}
    for _ in range(count):
        terms[(rng.choice(units), rng.choice(units))] = F(rng.randint(-3, 3), rng.randint(1, 3))
    return Tensor.build(n, terms)


@pytest.mark.parametrize("seed", range(6))
def test_residual_matches_dense_oracle(seed):
    rng = random.Random(seed)
    n = 2 if seed < 3 else 3
    r = random_tensor(rng, n, 4)
    assert dense_of(cybe_residual(r)) == dense_residual(r)


def test_dense_oracle_on_r_matrices():
    for L, terms in [
        (lie.maximal_parabolic(2, 1), {E(1, 2): 1}),
        (lie.maximal_parabolic(3, 1), {E(1, 2): 1, E(2, 3): 1}),
    ]:
        r = r_matrix(L, Functional.from_terms(terms))
        res = dense_residual(r)
        assert not any(any(row) for row in res)


@pytest.mark.parametrize(
    "top, bottom",
    [((1, 2), (3,)), ((2, 1), (3,)), ((1, 3), (4,)), ((3, 1), (4,)), ((2, 3), (1, 4)), ((1, 2), (2, 1))],
)
def test_frobenius_seaweeds_give_cybe_solutions(top, bottom):
    assert meander_index_sl(top, bottom) == 0
    L = lie.seaweed(top, bottom)
    r = r_matrix(L, find_frobenius_functional(L, seed=3))
    assert flip(r) == -r
    assert is_cybe_solution(r)


def test_r_matrix_is_basis_independent():
    L = lie.maximal_parabolic(3, 1)
    phi = Functional.from_terms({E(1, 2): 1, E(2, 3): 1}).vector(L)
    rng = random.Random(11)
    checked = 0
    while checked < 3:
        P = [[F(rng.randint(-2, 2)) for _ in range(L.dim)] for _ in range(L.dim)]
        try:
            M = lie.change_basis(L, P)
        except SingularMatrix:
            continue
        # Same functional, evaluated on the new basis matrices.
        psi = [sum(c * x for c, x in zip(phi, L.coordinates(mat))) for mat in M.realization]
        assert r_matrix(M, psi) == r_matrix(L, phi)
        checked += 1
