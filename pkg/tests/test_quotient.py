import sympy as sp

from cusplab.lattice import dual_basis, signature
from cusplab.linalg import Matrix, det
from cusplab.quotient_correspondence import (CONSTANTS, CuspLatticeConstants, invariant_lattice_LA,
                                             lx_gram, verify_pushforward_iso)


def test_lx_gram():
    L = lx_gram()
    assert L.gram == Matrix([[0, 3, 0, 0], [3, 0, 0, 0], [0, 0, 6, 3], [0, 0, 3, 2]])
    assert L.labels == ("xi1", "xi2", "xi3", "xi4")
    assert det(L.gram) == -27
    assert signature(L) == (3, 1)


def test_lx_is_three_times_the_dual_gram_sympy():
    G = sp.Matrix(invariant_lattice_LA().gram.rows)
    # Hermite dual basis g1, g2, g3, (g3 + g4)/3
    B = sp.Matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, sp.Rational(1, 3), sp.Rational(1, 3)]])
    assert 3 * B * G * B.T == sp.Matrix(lx_gram().gram.rows)
    assert all(x.is_integer for x in B * G)


def test_pushforward_report_passes():
    r = verify_pushforward_iso()
    assert r.passed, r.to_text()
    assert r["3^4 * d(dual) = d(L_X)"].witness == {"d_dual": "-1/3", "lhs": -27, "d_LX": -27}


def test_pull_then_push_is_multiplication_by_three():
    B, dual = dual_basis(invariant_lattice_LA())
    LX = lx_gram()
    for i in range(4):
        for j in range(4):
            u = tuple(int(a == i) for a in range(4))
            v = tuple(int(a == j) for a in range(4))
            assert LX.pair(u, v) == 3 * dual.pair(u, v)


def test_constants():
    assert CONSTANTS.consistent()
    assert CONSTANTS.d_I // 3 ** 6 == CONSTANTS.d_Ibar
    assert -CONSTANTS.d_Ibar == det(lx_gram().gram)
    assert not CuspLatticeConstants(d_LX=27).consistent()
