"""The order-3 action on Z^4 and its second exterior power.

Coordinates on Z^4 follow the ordered basis (alpha1, beta1, alpha2, beta2).
Wedge coordinates follow WEDGE_LABELS; the intersection pairing is
normalised by alpha1^alpha2^beta1^beta2 = 1.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .errors import NotInCommutant, NotInG, PreconditionFailed
from .lattice import GramLattice, shortest_vectors
from .linalg import (Matrix, det, det_expansion, hermite_basis, nullspace,
                     saturate, smith_normal_form, solve_in_basis)
from .polynomial import MultiPoly, Registry, substitute
from .scalars import QQ, UPoly

__all__ = [
    "ORDER3", "ORDER3_BLOCK", "TORUS_LABELS", "WEDGE_PAIRS", "WEDGE_LABELS",
    "WEDGE_FORM", "INVARIANT_CLASSES", "ORDER3_WEDGE_TABLE", "COMPLEMENT_CLASSES",
    "order3_solve", "cube_formula", "wedge_square", "invariant_lattice",
    "wedge_gram", "orthogonal_complement", "orientation_det",
    "orientation_identity", "commutant_decompose", "is_in_G",
    "g_action_on_LA", "order3_normal_form", "invariant_gram", "BLOCK_SWAP",
]

ORDER3_BLOCK = Matrix([[0, -1], [1, -1]])
ORDER3 = Matrix([[0, -1, 0, 0], [1, -1, 0, 0], [0, 0, 0, -1], [0, 0, 1, -1]])
BLOCK_SWAP = Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])

TORUS_LABELS = ("alpha1", "beta1", "alpha2", "beta2")
WEDGE_PAIRS = tuple(combinations(range(4), 2))
WEDGE_LABELS = tuple(f"{TORUS_LABELS[i]}^{TORUS_LABELS[j]}" for i, j in WEDGE_PAIRS)


def _wedge_index(i, j):
    """(index into WEDGE_PAIRS, sign) for e_i ^ e_j."""
    if i == j:
        return None, 0
    if i < j:
        return WEDGE_PAIRS.index((i, j)), 1
    return WEDGE_PAIRS.index((j, i)), -1


def _top_coefficient(p, q):
    """Coefficient of e1^e2^e3^e4 in e_p ^ e_q for wedge pairs p, q."""
    idx = p + q
    if len(set(idx)) < 4:
        return 0
    inversions = sum(1 for a in range(4) for b in range(a + 1, 4) if idx[a] > idx[b])
    return -1 if inversions % 2 else 1


# the orientation class alpha1^alpha2^beta1^beta2 equals -e1^e2^e3^e4
_ORIENTATION_SIGN = -1
WEDGE_FORM = Matrix([[_ORIENTATION_SIGN * _top_coefficient(p, q) for q in WEDGE_PAIRS]
                     for p in WEDGE_PAIRS])

INVARIANT_CLASSES = (
    (-1, 0, 0, 0, 0, 0),   # -alpha1^beta1
    (0, 0, 0, 0, 0, 1),    # alpha2^beta2
    (0, 0, 1, -1, 0, 0),   # alpha1^beta2 - beta1^alpha2
    (0, 1, 1, 0, 1, 0),    # alpha1^alpha2 + alpha1^beta2 + beta1^beta2
)
# images of the basis 2-forms under the order-3 action, as tabulated by hand
ORDER3_WEDGE_TABLE = {
    (0, 1): (1, 0, 0, 0, 0, 0),     # alpha1^beta1
    (2, 3): (0, 0, 0, 0, 0, 1),     # alpha2^beta2
    (0, 2): (0, 0, 0, 0, 1, 0),     # alpha1^alpha2 -> beta1^beta2
    (0, 3): (0, 0, 0, -1, -1, 0),   # alpha1^beta2
    (1, 2): (0, 0, -1, 0, -1, 0),   # beta1^alpha2
    (1, 3): (0, 1, 1, 1, 1, 0),     # beta1^beta2
}
COMPLEMENT_CLASSES = (
    (0, 1, 0, 0, -1, 0),   # alpha1^alpha2 - beta1^beta2
    (0, 0, 1, 1, 1, 0),    # alpha1^beta2 + beta1^alpha2 + beta1^beta2
)


def cube_formula(p, q):
    """Closed form of [[0, p], [1, q]]^3."""
    return Matrix([[p * q, p * (p + q * q)], [p + q * q, q * (2 * p + q * q)]])


def order3_solve():
    """Rational (p, q) with [[0, p], [1, q]]^3 = I, derived symbolically.

    Returns ``(solutions, cube_matches)`` where ``cube_matches`` says the
    symbolic cube agrees with :func:`cube_formula`.
    """
    reg = Registry("p q")
    p = MultiPoly.var(reg, "p")
    q = MultiPoly.var(reg, "q")
    zero = MultiPoly(reg, {}, QQ)
    one = MultiPoly.constant(reg, 1)
    A = [[zero, p], [one, q]]

    def mul(X, Y):
        return [[X[i][0] * Y[0][j] + X[i][1] * Y[1][j] for j in range(2)] for i in range(2)]

    cube = mul(mul(A, A), A)
    closed = cube_formula(p, q)
    cube_matches = all(cube[i][j] == closed[i, j] for i in range(2) for j in range(2))
    # lower-left entry p + q^2 = 0 gives p = -q^2; then pq = 1 becomes -q^3 = 1
    eqs = [cube[0][0] - 1, cube[0][1], cube[1][0], cube[1][1] - 1]
    reduced = [substitute(e, {"p": -q * q}) for e in eqs]
    univariate = []
    for e in reduced:
        coeffs = [0] * (e.total_degree() + 1) if e else [0]
        for ex, c in e.terms.items():
            coeffs[ex[1]] = int(c)
        univariate.append(UPoly(coeffs))
    candidates = univariate[0].rational_roots()
    sols = []
    for qv in candidates:
        pv = -qv * qv
        if all(e.evaluate((pv, qv)) == 0 for e in eqs):
            sols.append((int(pv) if pv.denominator == 1 else pv,
                         int(qv) if qv.denominator == 1 else qv))
    return sols, cube_matches


def wedge_square(M) -> Matrix:
    """Matrix of the induced map on Lambda^2 in the WEDGE_PAIRS basis."""
    M = Matrix(M)
    if M.shape != (4, 4):
        raise ValueError("wedge_square expects a 4x4 matrix")
    cols = []
    for i, j in WEDGE_PAIRS:
        cols.append(tuple(M[k, i] * M[l, j] - M[l, i] * M[k, j] for k, l in WEDGE_PAIRS))
    return Matrix.from_columns(cols)


def invariant_lattice(M6) -> list[tuple]:
    """Hermite basis of the saturated fixed sublattice of an integer matrix."""
    M6 = Matrix(M6)
    n = M6.nrows
    kernel = nullspace(M6 - Matrix.identity(n))
    if not kernel:
        return []
    ints = hermite_basis(kernel)
    return saturate(ints, n)


def wedge_gram(vectors) -> Matrix:
    V = Matrix.from_columns([tuple(v) for v in vectors])
    return V.T @ WEDGE_FORM @ V


def invariant_gram() -> Matrix:
    return wedge_gram(INVARIANT_CLASSES)


def orthogonal_complement(S) -> list[tuple]:
    """Saturated basis of the vectors pairing to zero with every vector in ``S``."""
    S = [tuple(v) for v in S]
    if not S:
        return [tuple(int(i == j) for j in range(6)) for i in range(6)]
    rows = Matrix(S) @ WEDGE_FORM
    kernel = nullspace(rows)
    if not kernel:
        return []
    return saturate(hermite_basis(kernel), WEDGE_FORM.nrows)


def orientation_det(a, b, M=ORDER3):
    """det of the columns (a, Ma, b, Mb)."""
    a, b = tuple(a), tuple(b)
    return det(Matrix.from_columns([a, M @ a, b, M @ b]))


def orientation_identity():
    """Symbolic det(alpha1, T alpha1, b, T b) for b = (a1, a2, a3, a4).

    Returns ``(determinant, expected)`` as polynomials; expected is
    a3^2 + a4^2 - a3*a4.
    """
    reg = Registry("a1 a2 a3 a4")
    b = tuple(MultiPoly.var(reg, n) for n in reg.names)
    zero = MultiPoly(reg, {}, QQ)
    e1 = tuple(MultiPoly.constant(reg, int(i == 0)) for i in range(4))

    def act(v):
        return tuple(sum((ORDER3[i, j] * v[j] for j in range(4)), zero) for i in range(4))

    cols = [e1, act(e1), b, act(b)]
    rows = [[cols[j][i] for j in range(4)] for i in range(4)]
    d = det_expansion(rows)
    a3, a4 = b[2], b[3]
    return d, a3 * a3 + a4 * a4 - a3 * a4


def commutant_decompose(M):
    """(a, b) with M = a*I + b*ORDER3_BLOCK."""
    M = Matrix(M)
    if M.shape != (2, 2):
        raise ValueError("expected a 2x2 matrix")
    b = M[1, 0]
    a = M[0, 0]
    if M[0, 1] != -b or M[1, 1] != a - b:
        raise NotInCommutant(f"{M.tolist()} does not commute with the order-3 block")
    return a, b


def is_in_G(g) -> bool:
    g = Matrix(g)
    if g.shape != (4, 4):
        return False
    if not all(isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)
               for r in g for x in r):
        return False
    return det(g) == 1 and g @ ORDER3 == ORDER3 @ g


def g_action_on_LA(g) -> Matrix:
    """Matrix (columns = images) of Lambda^2 g on the invariant classes."""
    g = Matrix(g)
    if not is_in_G(g):
        raise NotInG("matrix is not an orientation-preserving automorphism commuting with the action")
    W = wedge_square(g)
    cols = []
    for v in INVARIANT_CLASSES:
        c = solve_in_basis(INVARIANT_CLASSES, W @ v)
        if c is None:
            raise NotInG("induced map does not preserve the invariant lattice")
        cols.append(tuple(int(x) for x in c))
    return Matrix.from_columns(cols)


def _complete_basis(a, b):
    """Unimodular 4x4 matrix whose first two columns are a, b (spanning a primitive plane)."""
    U, D, _ = smith_normal_form(Matrix.from_columns([a, b]))
    if D[0, 0] != 1 or D[1, 1] != 1:
        raise PreconditionFailed("(a, Ma) does not span a primitive sublattice")
    Uinv = U.inverse().map(lambda x: int(x))
    return Matrix.from_columns([a, b, Uinv.col(2), Uinv.col(3)])


def order3_normal_form(M) -> Matrix:
    """Unimodular U with U^-1 M U = ORDER3, for M of order 3 without fixed vectors."""
    M = Matrix(M)
    if M.shape != (4, 4):
        raise PreconditionFailed("expected a 4x4 matrix")
    I = Matrix.identity(4)
    M2 = M @ M
    if M2 @ M != I:
        raise PreconditionFailed("M^3 != I")
    if I + M + M2 != Matrix.zeros(4, 4):
        raise PreconditionFailed("M has nonzero invariant vectors")
    S = I + M.T @ M + M2.T @ M2
    _, vecs = shortest_vectors(GramLattice(S))
    a1 = vecs[0].coords
    b1 = M @ a1
    W = _complete_basis(a1, b1)
    # form on the quotient by span(a1, b1): Schur complement of the first block
    SW = W.T @ S @ W
    A = SW.submatrix(range(2), range(2))
    B = SW.submatrix(range(2), range(2, 4))
    C = SW.submatrix(range(2, 4), range(2, 4))
    quotient = C - B.T @ A.inverse() @ B
    _, qvecs = shortest_vectors(GramLattice(quotient))
    m1, m2 = qvecs[0].coords
    a2 = tuple(m1 * x + m2 * y for x, y in zip(W.col(2), W.col(3)))
    b2 = M @ a2
    U = Matrix.from_columns([a1, b1, a2, b2])
    if abs(det(U)) != 1 or U.inverse() @ M @ U != ORDER3:
        raise PreconditionFailed("normal form construction failed verification")
    return U
