import random
from fractions import Fraction
from math import gcd

import pytest

from frobenius import lie, linalg
from frobenius.errors import NotFrobenius, NotFrobeniusOrUnlucky
from frobenius.index import (
    Functional,
    bform_matrix,
    find_frobenius_functional,
    generic_index,
    index_of_functional,
    is_frobenius,
    principal_element,
    random_functional,
)
from frobenius.lie import Cartan, MatrixUnit

E = MatrixUnit


def star(**kw):
    return Functional.from_terms(kw)


@pytest.fixture
def borel():
    return lie.maximal_parabolic(2, 1)


def test_bform_examples(borel):
    F = Functional.from_terms({E(1, 2): 1})
    assert bform_matrix(borel, F) == [[0, 2], [-2, 0]]
    assert bform_matrix(borel, Functional.from_terms({})) == [[0, 0], [0, 0]]
    assert bform_matrix(lie.sl(2), F) == [[0, 2, 0], [-2, 0, 0], [0, 0, 0]]


def test_index_of_functional_examples(borel):
    F = Functional.from_terms({E(1, 2): 1})
    assert index_of_functional(borel, F) == 0
    assert index_of_functional(lie.sl(2), F) == 1
    L = lie.seaweed((2, 1), (1, 2))
    assert index_of_functional(L, Functional.from_terms({})) == L.dim


def test_generic_index_examples():
    assert generic_index(lie.sl(2)).index == 1
    for n, i in [(2, 1), (3, 2), (5, 2), (7, 3)]:
        assert gcd(n, i) == 1
        assert generic_index(lie.maximal_parabolic(n, i)).index == 0
    assert generic_index(lie.seaweed((4,), (2, 2))).index == 1


def test_generic_index_report_is_reproducible():
    L = lie.seaweed((3, 1), (1, 3))
    a = generic_index(L, trials=4, seed=11)
    b = generic_index(L, trials=4, seed=11)
    assert a == b
    assert (a.trials, a.seed, a.dim) == (4, 11, L.dim)
    assert index_of_functional(L, a.witness) == a.index
    assert (L.dim - a.index) % 2 == 0


def test_random_functional_box():
    L = lie.sl(3)
    F = random_functional(L, 5)
    assert all(abs(c) <= 2 * L.dim for _, c in F.terms)
    assert F == random_functional(L, 5)


def test_is_frobenius_examples(borel):
    assert is_frobenius(borel, Functional.from_terms({E(1, 2): 1}))
    assert not is_frobenius(borel, Functional.from_terms({}))
    L = lie.maximal_parabolic(4, 2)
    for seed in range(5):
        assert not is_frobenius(L, random_functional(L, seed))


def test_find_frobenius_functional(borel):
    assert is_frobenius(borel, find_frobenius_functional(borel))
    with pytest.raises(NotFrobeniusOrUnlucky):
        find_frobenius_functional(lie.sl(2), max_attempts=10)
    L = lie.maximal_parabolic(5, 2)
    assert is_frobenius(L, find_frobenius_functional(L))


def test_principal_element_examples(borel):
    x = principal_element(borel, Functional.from_terms({E(1, 2): 1}))
    assert x == [Fraction(1, 2), 0]
    assert borel.to_matrix(x) == {(1, 1): Fraction(1, 2), (2, 2): Fraction(-1, 2)}
    L = lie.maximal_parabolic(3, 1)
    x = principal_element(L, Functional.from_terms({E(1, 2): 1, E(2, 3): 1}))
    assert L.to_matrix(x) == {(1, 1): 1, (3, 3): -1}
    with pytest.raises(NotFrobenius):
        principal_element(lie.sl(2), Functional.from_terms({E(1, 2): 1}))


def test_principal_element_identity_and_uniqueness():
    L = lie.seaweed((2, 3), (1, 4))
    F = find_frobenius_functional(L, seed=3)
    phi = F.vector(L)
    x = principal_element(L, F)
    for b in range(L.dim):
        y = L.unit_vector(b)
        assert F(L, lie.bracket(L, x, y)) == F(L, y)
    # Perturbing in any coordinate direction breaks the identity.
    m = bform_matrix(L, phi)
    for a in range(L.dim):
        moved = list(x)
        moved[a] += 1
        assert linalg.vecmat(moved, m) != phi


def test_index_is_invariant_under_change_of_basis():
    L = lie.seaweed((1, 2), (2, 1))
    rng = random.Random(2)
    P = [[Fraction(rng.randint(-3, 3)) for _ in range(L.dim)] for _ in range(L.dim)]
    M = lie.change_basis(L, P)
    assert generic_index(M).index == generic_index(L).index == 0
    assert lie.contains_cartan(M)
    assert M.coordinates({(1, 1): 1, (2, 2): -1}) is not None


def test_functional_evaluation_and_labels():
    L = lie.sl(2)
    F = Functional.from_terms([(Cartan(1), Fraction(1, 2)), (E(2, 1), 3), (Cartan(1), Fraction(1, 2))])
    assert F.vector(L) == [1, 0, 3]
    assert F(L, [2, 5, 1]) == 5
    with pytest.raises(KeyError):
        Functional.from_terms({E(1, 3): 1}).vector(L)
