import random
from fractions import Fraction
from math import prod

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from cusplab.errors import NonSquare, RankDeficient
from cusplab.linalg import (Matrix, det, det_expansion, elementary_divisors, hermite_basis,
                            nullspace, rank, same_lattice, saturate, smith_normal_form,
                            solve_in_basis)
from cusplab.torus_action import COMPLEMENT_CLASSES

from conftest import int_matrices


def test_det_examples():
    assert det(Matrix.identity(4)) == 1
    assert det([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 2, 1], [0, 0, 1, 2]]) == -3
    assert det([[2, 1], [1, 2]]) == 3


def test_det_rejects_non_square():
    with pytest.raises(NonSquare):
        det([[1, 2, 3], [4, 5, 6]])


def test_bareiss_agrees_with_cofactor_expansion_on_many_matrices():
    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randint(1, 4)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert det(m) == det_expansion(m)


@given(int_matrices())
def test_det_matches_sympy(m):
    assert det(m) == sp.Matrix(m).det()


def test_det_of_rational_matrix():
    m = [[Fraction(1, 2), 1], [1, Fraction(1, 3)]]
    assert det(m) == Fraction(1, 6) - 1


@given(int_matrices(n=3))
def test_inverse_when_invertible(m):
    M = Matrix(m)
    if det(M) == 0:
        return
    assert M @ M.inverse() == Matrix.identity(3)


@given(int_matrices())
def test_rank_and_nullspace_match_sympy(m):
    S = sp.Matrix(m)
    assert rank(m) == S.rank()
    ns = nullspace(m)
    assert len(ns) == len(S.nullspace())
    for v in ns:
        assert all(x == 0 for x in Matrix(m) @ v)


def _check_smith(m):
    U, D, V = smith_normal_form(m)
    assert U @ Matrix(m) @ V == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    diag = [D[i, i] for i in range(min(D.shape))]
    assert all(D[i, j] == 0 for i in range(D.nrows) for j in range(D.ncols) if i != j)
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else b % a == 0
    return diag


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_smith_form_properties(r, c, data):
    m = [[data.draw(st.integers(-9, 9)) for _ in range(c)] for _ in range(r)]
    diag = _check_smith(m)
    # product of divisors equals |det| in the square case
    if r == c:
        assert prod(diag) == abs(det(m))


def test_smith_examples():
    assert _check_smith(Matrix.identity(3)) == [1, 1, 1]
    assert _check_smith([[2, 1], [1, 2]]) == [1, 3]
    assert _check_smith(Matrix.identity(4).scale(3)) == [3, 3, 3, 3]


def test_smith_of_identity_is_trivial():
    U, D, V = smith_normal_form(Matrix.identity(3))
    assert U == D == V == Matrix.identity(3)


def test_saturate_examples():
    assert saturate([(3, 0)]) == [(1, 0)]
    assert saturate([(2, 4)]) == [(1, 2)]
    assert same_lattice(saturate(COMPLEMENT_CLASSES, 6), COMPLEMENT_CLASSES)


def test_saturate_rejects_dependent_input():
    with pytest.raises(RankDeficient):
        saturate([(1, 2), (2, 4)])


@given(st.lists(st.tuples(*[st.integers(-6, 6)] * 4), min_size=1, max_size=3))
def test_saturation_is_idempotent_with_index_product_of_divisors(vs):
    if rank(Matrix.from_columns(vs)) < len(vs):
        return
    s = saturate(vs)
    assert saturate(s) == s
    # every input vector lies in the saturation with integer coordinates
    for v in vs:
        c = solve_in_basis(s, v)
        assert c is not None and all(Fraction(x).denominator == 1 for x in c)
    index = abs(prod(d for d in elementary_divisors(vs)))
    assert index == prod(elementary_divisors([tuple(solve_in_basis(s, v)) for v in vs]))


def test_hermite_basis_is_canonical():
    a = [(2, 0, 0), (0, 3, 0), (2, 3, 0)]
    b = [(2, 3, 0), (4, 3, 0)]
    assert hermite_basis(a) == hermite_basis(b)
    assert same_lattice(a, b)
    assert not same_lattice(a, [(1, 0, 0), (0, 3, 0)])


def test_hermite_lower_form_pivots_last():
    assert hermite_basis([(1, 0), (1, 3)], lower=True) == [(1, 0), (0, 3)]
    assert hermite_basis([(1, 0), (1, 3)]) == [(1, 0), (0, 3)]
    assert hermite_basis([(2, 1), (0, 3)], lower=True) == [(6, 0), (2, 1)]


def test_solve_in_basis():
    assert solve_in_basis([(1, 0), (1, 1)], (3, 2)) == (1, 2)
    assert solve_in_basis([(1, 0, 0), (0, 1, 0)], (0, 0, 1)) is None
    assert solve_in_basis([(2, 0), (0, 2)], (1, 1)) == (Fraction(1, 2), Fraction(1, 2))
