"""Lattices presented by an exact Gram matrix.

Vectors are always written in coordinates relative to the lattice basis.
Dual lattice elements carry rational coordinates relative to the primal
basis, so primitivity questions reduce to gcd computations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import floor, ceil, isqrt, lcm

import numpy as np

from .errors import Degenerate, NotPositiveDefinite, RankDeficient, ZeroScale
from .linalg import Matrix, det, elementary_divisors, hermite_basis

__all__ = [
    "GramLattice",
    "LatticeVector",
    "NoneWithinBound",
    "discriminant",
    "dual_basis",
    "rescale",
    "is_primitive_sublattice",
    "represents",
    "shortest_vectors",
    "signature",
    "characteristic_polynomial",
]


def _exact(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


class GramLattice:
    """Finite-rank lattice with a symmetric exact Gram matrix."""

    __slots__ = ("gram", "labels")

    def __init__(self, gram, labels=None):
        g = Matrix(gram).map(_exact)
        if not g.is_square():
            raise ValueError("Gram matrix must be square")
        if not g.is_symmetric():
            raise ValueError("Gram matrix must be symmetric")
        self.gram = g
        if labels is None:
            labels = [f"e{i + 1}" for i in range(g.nrows)]
        labels = tuple(labels)
        if len(labels) != g.nrows:
            raise ValueError("one label per basis vector is required")
        self.labels = labels

    @property
    def rank(self) -> int:
        return self.gram.nrows

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for r in self.gram for x in r)

    def pair(self, u, v):
        return _exact(sum((Fraction(u[i]) * self.gram[i, j] * v[j]
                           for i in range(self.rank) for j in range(self.rank)), Fraction(0)))

    def norm(self, v):
        return self.pair(v, v)

    def vector(self, *coords) -> "LatticeVector":
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction)):
            coords = tuple(coords[0])
        return LatticeVector(tuple(_exact(c) for c in coords), self)

    def __eq__(self, other):
        return isinstance(other, GramLattice) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"GramLattice({self.gram.tolist()}, labels={list(self.labels)})"


@dataclass(frozen=True)
class LatticeVector:
    coords: tuple
    lattice: GramLattice

    def __post_init__(self):
        if len(self.coords) != self.lattice.rank:
            raise ValueError("coordinate length does not match lattice rank")

    @property
    def norm(self):
        return self.lattice.norm(self.coords)

    def pair(self, other):
        c = other.coords if isinstance(other, LatticeVector) else other
        return self.lattice.pair(self.coords, c)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


class _NoneWithinBound:
    """Result of an unsuccessful bounded search (not a non-existence proof)."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __bool__(self):
        return False

    def __repr__(self):
        return "NoneWithinBound"


NoneWithinBound = _NoneWithinBound()


def discriminant(L: GramLattice):
    return det(L.gram)


def dual_basis(L: GramLattice, kind: str = "hermite"):
    """Basis of the dual lattice in rational primal coordinates, and its Gram lattice.

    ``kind="dual"`` gives the rows of the inverse Gram matrix (the basis dual
    to the primal one).  ``kind="hermite"`` gives the lower-triangular Hermite
    basis of the same lattice, which keeps as many primal basis vectors as
    possible.
    """
    if discriminant(L) == 0:
        raise Degenerate("dual of a degenerate lattice")
    rows = L.gram.inverse().map(_exact).rows
    if kind == "dual":
        basis = [tuple(r) for r in rows]
    elif kind == "hermite":
        basis = hermite_basis(rows, lower=True)
    else:
        raise ValueError(f"unknown dual basis kind {kind!r}")
    B = Matrix(basis)
    gram = (B @ L.gram @ B.T).map(_exact)
    labels = [f"{lab}*" for lab in L.labels]
    return B, GramLattice(gram, labels)


def rescale(L: GramLattice, m) -> GramLattice:
    m = _exact(m)
    if m == 0:
        raise ZeroScale("rescaling by zero")
    return GramLattice(L.gram.scale(m).map(_exact), L.labels)


def is_primitive_sublattice(B, ambient_rank: int | None = None):
    """``B`` is a list of integer vectors (the embedded basis)."""
    vectors = [tuple(int(x) for x in v) for v in B]
    if ambient_rank is not None and any(len(v) != ambient_rank for v in vectors):
        raise ValueError("vector length does not match ambient rank")
    divs = elementary_divisors(vectors)
    if len(vectors) > len(vectors[0]) or any(d == 0 for d in divs[:len(vectors)]):
        raise RankDeficient("embedding matrix does not have full column rank")
    divs = tuple(divs[:len(vectors)])
    return all(d == 1 for d in divs), divs


def _zigzag(bound):
    out = [0]
    for i in range(1, bound + 1):
        out += [i, -i]
    return out


def represents(L: GramLattice, c, bound: int):
    """First vector ``v`` with ``|v_i| <= bound`` and ``v.G.v = c``.

    Candidates are ordered lexicographically, each coordinate running through
    ``0, 1, -1, 2, -2, ...``.  Returns ``NoneWithinBound`` if the box holds no
    solution.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    n = L.rank
    den = 1
    for r in L.gram:
        for x in r:
            den = lcm(den, Fraction(x).denominator)
    target = Fraction(c) * den
    if target.denominator != 1:
        return NoneWithinBound
    target = int(target)
    G = [[int(Fraction(x) * den) for x in r] for r in L.gram]
    zz = np.array(_zigzag(bound), dtype=np.int64)
    # guard against int64 overflow in the vectorised part
    peak = sum(abs(x) for r in G for x in r) * bound * bound
    if peak >= 2 ** 62:
        return _represents_python(L, c, bound)

    inner = min(n, 2)
    outer = n - inner
    if inner == 2:
        a = np.repeat(zz, len(zz))
        b = np.tile(zz, len(zz))
        grid = [a, b]
    else:
        grid = [zz]
    gi = [[G[outer + i][outer + j] for j in range(inner)] for i in range(inner)]
    inner_val = sum(gi[i][j] * grid[i] * grid[j] for i in range(inner) for j in range(inner))
    for head in itertools.product(_zigzag(bound), repeat=outer):
        const = sum(G[i][j] * head[i] * head[j] for i in range(outer) for j in range(outer))
        lin = 0
        for j in range(inner):
            coef = 2 * sum(G[i][outer + j] * head[i] for i in range(outer))
            if coef:
                lin = lin + coef * grid[j]
        vals = inner_val + lin + const
        hits = np.flatnonzero(vals == target)
        if hits.size:
            h = int(hits[0])
            tail = tuple(int(g[h]) for g in grid)
            return L.vector(tuple(head) + tail)
    return NoneWithinBound


def _represents_python(L, c, bound):
    for v in itertools.product(_zigzag(bound), repeat=L.rank):
        if L.norm(v) == c:
            return L.vector(v)
    return NoneWithinBound


def _leading_minors(G):
    n = G.nrows
    return [det(G.submatrix(range(i), range(i))) for i in range(1, n + 1)]


def _ldl(G):
    """q[i][i] = pivots, q[i][j] (j > i) = multipliers, so x.G.x = sum q_ii (x_i + sum_j q_ij x_j)^2."""
    n = G.nrows
    a = [[Fraction(x) for x in r] for r in G]
    q = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        q[i][i] = a[i][i]
        for j in range(i + 1, n):
            q[i][j] = a[i][j] / a[i][i]
        for j in range(i + 1, n):
            for l in range(j, n):
                a[j][l] -= q[i][j] * a[i][l]
                a[l][j] = a[j][l]
    return q


def _interval(center, radius_sq):
    """Integers x with (x - center)^2 <= radius_sq, as a range."""
    if radius_sq < 0:
        return range(0)
    s = isqrt(floor(radius_sq)) + 1
    lo, hi = floor(center) - s, ceil(center) + s
    while lo <= hi and (lo - center) ** 2 > radius_sq:
        lo += 1
    while hi >= lo and (hi - center) ** 2 > radius_sq:
        hi -= 1
    return range(lo, hi + 1)


def _gram_schmidt(G):
    n = len(G)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            mu[i][j] = (G[i][j] - sum((mu[j][l] * mu[i][l] * bstar[l] for l in range(j)),
                                      Fraction(0))) / bstar[j]
        bstar[i] = G[i][i] - sum((mu[i][l] ** 2 * bstar[l] for l in range(i)), Fraction(0))
    return mu, bstar


def lll_reduce(gram):
    """Exact LLL (delta = 3/4) on a positive-definite Gram matrix.

    Returns ``(B, reduced)`` with B unimodular (rows = new basis in old
    coordinates) and ``reduced = B G B^T``.
    """
    G0 = [[Fraction(x) for x in r] for r in gram]
    n = len(G0)
    B = [[int(i == j) for j in range(n)] for i in range(n)]

    def gram_of(B):
        return [[sum((B[i][a] * G0[a][b] * B[j][b] for a in range(n) for b in range(n)),
                     Fraction(0)) for j in range(n)] for i in range(n)]

    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            mu, _ = _gram_schmidt(gram_of(B))
            q = floor(mu[k][j] + Fraction(1, 2))
            if q:
                B[k] = [x - q * y for x, y in zip(B[k], B[j])]
        mu, bstar = _gram_schmidt(gram_of(B))
        if bstar[k] >= (Fraction(3, 4) - mu[k][k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            B[k], B[k - 1] = B[k - 1], B[k]
            k = max(k - 1, 1)
    return Matrix(B), Matrix(gram_of(B)).map(_exact)


def shortest_vectors(L: GramLattice):
    """Minimum norm and all minimal vectors (first nonzero coordinate positive).

    The basis is first LLL-reduced; then an exact Fincke-Pohst enumeration on
    the rational LDL decomposition runs with radius the smallest reduced
    diagonal entry (an upper bound for the minimum).
    """
    if not all(m > 0 for m in _leading_minors(L.gram)):
        raise NotPositiveDefinite("Gram matrix is not positive definite")
    n = L.rank
    B, R = lll_reduce(L.gram)
    q = _ldl(R)
    radius = min(Fraction(R[i, i]) for i in range(n))
    found = []
    x = [0] * n

    def search(i, remaining):
        center = -sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        for xi in _interval(center, remaining / q[i][i]):
            x[i] = xi
            rest = remaining - q[i][i] * (xi - center) ** 2
            if i:
                search(i - 1, rest)
            elif any(x):
                found.append((radius - rest, tuple(x)))
        x[i] = 0

    search(n - 1, radius)
    best = min(nrm for nrm, _ in found)
    minimal = set()
    for nrm, y in found:
        if nrm == best:
            v = tuple(sum(y[i] * B[i, j] for i in range(n)) for j in range(n))
            if _first_nonzero(v) < 0:
                v = tuple(-c for c in v)
            minimal.add(v)
    # smallest coordinates first, ties in decreasing lexicographic order
    minimal = sorted(minimal, key=lambda v: (sum(abs(c) for c in v), tuple(-c for c in v)))
    return _exact(best), [L.vector(v) for v in minimal]


def _first_nonzero(v):
    return next(c for c in v if c)


def characteristic_polynomial(M: Matrix) -> list:
    """Coefficients (highest degree first) of det(xI - M), Faddeev-LeVerrier."""
    n = M.nrows
    coeffs = [Fraction(1)]
    A = Matrix.identity(n).map(Fraction)
    Mk = Matrix.zeros(n, n)
    for k in range(1, n + 1):
        Mk = M @ A if k == 1 else M @ (Mk + Matrix.identity(n).scale(coeffs[-1]))
        c = -Fraction(Mk.trace()) / k
        coeffs.append(c)
    return [_exact(c) for c in coeffs]


def _sign_changes(seq):
    signs = [1 if c > 0 else -1 for c in seq if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def signature(L: GramLattice):
    """(positive, negative) index by Descartes' rule on the characteristic polynomial.

    Exact for symmetric matrices, whose eigenvalues are all real.
    """
    cp = characteristic_polynomial(L.gram)
    n = len(cp) - 1
    pos = _sign_changes(cp)
    neg = _sign_changes([c * (-1) ** (n - i) for i, c in enumerate(cp)])
    return pos, neg
