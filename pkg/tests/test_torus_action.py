import random

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from cusplab.errors import NotInCommutant, NotInG, PreconditionFailed
from cusplab.lattice import GramLattice, discriminant, signature
from cusplab.linalg import Matrix, det, same_lattice
from cusplab.torus_action import (BLOCK_SWAP, COMPLEMENT_CLASSES, INVARIANT_CLASSES, ORDER3,
                                  ORDER3_BLOCK, ORDER3_WEDGE_TABLE, WEDGE_PAIRS,
                                  commutant_decompose, cube_formula, g_action_on_LA,
                                  invariant_gram, invariant_lattice, is_in_G, orientation_det,
                                  orientation_identity, order3_normal_form, order3_solve,
                                  orthogonal_complement, wedge_gram, wedge_square)

from conftest import int_matrices

T2 = ORDER3_BLOCK


def test_order3_solution_is_unique():
    sols, cube_ok = order3_solve()
    assert sols == [(-1, -1)] and cube_ok
    assert T2 @ T2 @ T2 == Matrix.identity(2)


def test_cube_formula_against_sympy():
    p, q = sp.symbols("p q")
    M = sp.Matrix([[0, p], [1, q]])
    formula = sp.Matrix([[p * q, p * (p + q**2)], [p + q**2, q * (2 * p + q**2)]])
    assert sp.expand(M**3 - formula) == sp.zeros(2, 2)
    assert cube_formula(-1, -1) == Matrix.identity(2)
    # the q = 0 branch: p*q = 1 is impossible
    assert sp.solve([e for e in (formula - sp.eye(2)).subs(q, 0)], [p]) == []


@given(int_matrices(n=4, lo=-3, hi=3), int_matrices(n=4, lo=-3, hi=3))
def test_wedge_square_is_functorial(a, b):
    A, B = Matrix(a), Matrix(b)
    assert wedge_square(A @ B) == wedge_square(A) @ wedge_square(B)
    assert det(wedge_square(A)) == det(A) ** 3


def test_wedge_square_of_the_action():
    W = wedge_square(ORDER3)
    assert wedge_square(Matrix.identity(4)) == Matrix.identity(6)
    for pair, image in ORDER3_WEDGE_TABLE.items():
        assert W.col(WEDGE_PAIRS.index(pair)) == image
    assert W.trace() == 3
    x = sp.Symbol("x")
    # eigenvalue 1 four times, a primitive cube root pair once
    assert sp.factor(sp.Matrix(W.rows).charpoly(x).as_expr()) == (x - 1) ** 4 * (x**2 + x + 1)


def test_invariant_lattice():
    assert len(invariant_lattice(Matrix.identity(6))) == 6
    inv = invariant_lattice(wedge_square(ORDER3))
    assert len(inv) == 4 and same_lattice(inv, INVARIANT_CLASSES)
    for v in INVARIANT_CLASSES:
        assert wedge_square(ORDER3) @ v == v


def test_wedge_grams():
    assert invariant_gram() == Matrix([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 2, 1], [0, 0, 1, 2]])
    assert wedge_gram(COMPLEMENT_CLASSES) == Matrix([[-2, 1], [1, -2]])
    both = wedge_gram(list(INVARIANT_CLASSES) + list(COMPLEMENT_CLASSES))
    assert all(both[i, j] == 0 for i in range(4) for j in range(4, 6))
    assert signature(GramLattice(invariant_gram())) == (3, 1)


def _sympy_wedge_pairing(u, v):
    """Coefficient of the volume form in u^v, by summing over permutations."""
    idx = {pair: i for i, pair in enumerate(WEDGE_PAIRS)}
    total = 0
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            perm = (a, b, c, d)
            if len(set(perm)) == 4:
                total += u[i] * v[j] * sp.combinatorics.Permutation(list(perm)).signature()
    # alpha1^alpha2^beta1^beta2 = -e0^e1^e2^e3 in the (alpha1, beta1, alpha2, beta2) order
    return -total


@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6),
       st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_wedge_pairing_matches_an_independent_expansion(u, v):
    assert wedge_gram([tuple(u), tuple(v)])[0, 1] == _sympy_wedge_pairing(u, v)


def test_orthogonal_complement():
    comp = orthogonal_complement(INVARIANT_CLASSES)
    assert len(comp) == 2 and same_lattice(comp, COMPLEMENT_CLASSES)
    assert discriminant(GramLattice(wedge_gram(comp))) == 3
    full = [tuple(int(i == j) for j in range(6)) for i in range(6)]
    assert orthogonal_complement(full) == []


def test_orientation_examples():
    e1, e3 = (1, 0, 0, 0), (0, 0, 1, 0)
    assert orientation_det(e1, e3) == 1
    assert orientation_det(e1, e1) == 0
    d, expected = orientation_identity()
    assert d == expected


def test_orientation_sign_on_random_pairs():
    rng = random.Random(11)
    for _ in range(10_000):
        a = [rng.randint(-20, 20) for _ in range(4)]
        b = [rng.randint(-20, 20) for _ in range(4)]
        d = orientation_det(a, b)
        assert d >= 0
        cols = Matrix.from_columns([a, ORDER3 @ a, b, ORDER3 @ b])
        assert (d == 0) == (cols.rank() < 4)


def test_orientation_identity_against_sympy():
    a = sp.symbols("a1:5")
    T = sp.Matrix(ORDER3.rows)
    e1 = sp.Matrix([1, 0, 0, 0])
    b = sp.Matrix(a)
    d = sp.Matrix.hstack(e1, T * e1, b, T * b).det()
    assert sp.expand(d - (a[2] ** 2 + a[3] ** 2 - a[2] * a[3])) == 0


def test_commutant():
    assert commutant_decompose(T2) == (0, 1)
    assert commutant_decompose(Matrix.identity(2)) == (1, 0)
    with pytest.raises(NotInCommutant):
        commutant_decompose([[1, 1], [0, 1]])


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_commutant_round_trip(a, b):
    M = Matrix.identity(2).scale(a) + T2.scale(b)
    assert commutant_decompose(M) == (a, b)


def test_membership_in_G():
    assert is_in_G(ORDER3)
    assert is_in_G(Matrix.block([[T2, Matrix.zeros(2, 2)], [Matrix.zeros(2, 2), Matrix.identity(2)]]))
    assert is_in_G(BLOCK_SWAP)
    assert not is_in_G(Matrix.diag([1, 1, 1, -1]))
    assert not is_in_G(Matrix.diag([-1, 1, 1, 1]))


def test_induced_action_on_invariant_classes():
    assert g_action_on_LA(Matrix.identity(4)) == Matrix.identity(4)
    assert g_action_on_LA(ORDER3) == Matrix.identity(4)
    A = g_action_on_LA(BLOCK_SWAP)
    assert A == Matrix([[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 1, 1], [0, 0, 0, -1]])
    G = invariant_gram()
    assert A.T @ G @ A == G
    with pytest.raises(NotInG):
        g_action_on_LA(Matrix.diag([1, 1, 1, -1]))


def _random_G(rng):
    blocks = []
    for _ in range(4):
        a, b = rng.randint(-2, 2), rng.randint(-2, 2)
        blocks.append(Matrix.identity(2).scale(a) + T2.scale(b))
    return Matrix.block([blocks[:2], blocks[2:]])


def test_G_preserves_both_lattices_and_forms():
    rng = random.Random(3)
    hits = 0
    while hits < 25:
        g = _random_G(rng)
        if not is_in_G(g):
            continue
        hits += 1
        A = g_action_on_LA(g)
        G = invariant_gram()
        assert A.T @ G @ A == G
        W = wedge_square(g)
        images = [W @ d for d in COMPLEMENT_CLASSES]
        assert same_lattice(images, COMPLEMENT_CLASSES)
        assert wedge_gram(images) == wedge_gram(COMPLEMENT_CLASSES)


def test_normal_form():
    U = order3_normal_form(ORDER3)
    assert U.inverse() @ ORDER3 @ U == ORDER3
    rng = random.Random(5)
    done = 0
    while done < 20:
        V = Matrix([[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)])
        if abs(det(V)) != 1:
            continue
        M = V @ ORDER3 @ V.inverse()
        U = order3_normal_form(M)
        assert abs(det(U)) == 1 and U.inverse() @ M @ U == ORDER3
        done += 1


def test_normal_form_preconditions():
    with pytest.raises(PreconditionFailed):
        order3_normal_form(Matrix.identity(4))
    with pytest.raises(PreconditionFailed):
        order3_normal_form(Matrix.diag([1, 1, 1, -1]))
