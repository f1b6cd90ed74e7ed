"""Exact matrices over Z, Q, Q(k) and other commutative rings.

Entries are plain Python scalars (``int``, ``Fraction``, ``RationalFunction``,
``MultiPoly``...); nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import gcd, lcm

from .errors import NonSquare, RankDeficient

__all__ = [
    "Matrix",
    "det",
    "det_expansion",
    "rank",
    "nullspace",
    "smith_normal_form",
    "hermite_basis",
    "saturate",
    "same_lattice",
    "solve_in_basis",
]


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        assert r == 0, "inexact integer division in Bareiss step"
        return q
    return a / b


class Matrix:
    """Immutable rectangular matrix; ``m[i, j]`` or ``m[i][j]`` for entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def from_columns(cls, cols) -> "Matrix":
        cols = [tuple(c) for c in cols]
        return cls(list(zip(*cols))) if cols else cls([])

    @classmethod
    def diag(cls, entries) -> "Matrix":
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def block(cls, blocks) -> "Matrix":
        rows = []
        for brow in blocks:
            for i in range(brow[0].nrows):
                rows.append(sum((b.rows[i] for b in brow), ()))
        return cls(rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.rows[i][j]
        return self.rows[idx]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return self.nrows

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        return Matrix(list(zip(*self.rows))) if self.rows else Matrix([])

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.rows == other.rows
        if isinstance(other, (list, tuple)):
            return self.rows == Matrix(other).rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"Matrix([{body}])"

    def __add__(self, other):
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        return Matrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.columns()
            return Matrix([[_dot(r, c) for c in cols] for r in self.rows])
        v = tuple(other)
        if len(v) != self.ncols:
            raise ValueError("shape mismatch in matrix-vector product")
        return tuple(_dot(r, v) for r in self.rows)

    def __pow__(self, e: int):
        if not self.is_square():
            raise NonSquare("power of a non-square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.nrows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def trace(self):
        if not self.is_square():
            raise NonSquare("trace of a non-square matrix")
        return sum(self.rows[i][i] for i in range(self.nrows))

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(a) for a in r] for r in self.rows])

    def submatrix(self, rows, cols) -> "Matrix":
        return Matrix([[self.rows[i][j] for j in cols] for i in rows])

    def det(self):
        return det(self)

    def rank(self) -> int:
        return rank(self)

    def inverse(self) -> "Matrix":
        """Inverse over the fraction field (Fractions for integer input)."""
        if not self.is_square():
            raise NonSquare("inverse of a non-square matrix")
        n = self.nrows
        a = [[_to_field(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
             for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next((i for i in range(c, n) if a[i][c]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[c], a[piv] = a[piv], a[c]
            inv = 1 / a[c][c]
            a[c] = [x * inv for x in a[c]]
            for i in range(n):
                if i != c and a[i][c]:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return Matrix([[_simplify(x) for x in r[n:]] for r in a])


def _dot(r, c):
    acc = 0
    for a, b in zip(r, c):
        if a and b:
            acc = acc + a * b
    return acc


def _to_field(x):
    return Fraction(x) if isinstance(x, int) else x


def _simplify(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _as_rows(m):
    return [list(r) for r in (m.rows if isinstance(m, Matrix) else m)]


def det(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise NonSquare(f"determinant of a non-square {n}x{len(a[0]) if a else 0} matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0 * a[0][0]
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = _exact_div(a[i][j] * a[c][c] - a[i][c] * a[c][j], prev)
            a[i][c] = 0
        prev = a[c][c]
    out = a[n - 1][n - 1]
    return _simplify(out if sign == 1 else -out)


def _perm_sign(p) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def det_expansion(m):
    """Leibniz-formula determinant; works over any commutative ring (no division)."""
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise NonSquare("determinant of a non-square matrix")
    total = 0
    for p in permutations(range(n)):
        term = _perm_sign(p)
        for i in range(n):
            term = term * a[i][p[i]]
            if not term:
                break
        if term:
            total = total + term
    return total


def _rref(m):
    a = [[_to_field(x) for x in r] for r in _as_rows(m)]
    nr = len(a)
    nc = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def rank(m) -> int:
    return len(_rref(m)[1])


def nullspace(m) -> list[tuple]:
    """Basis of the right kernel over the fraction field, one vector per free column."""
    a, pivots = _rref(m)
    nc = len(a[0]) if a else 0
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][f]
        basis.append(tuple(_simplify(x) for x in v))
    return basis


# ---------------------------------------------------------------------------
# integer lattices


def smith_normal_form(m):
    """Return ``(U, D, V)`` with ``U @ M @ V == D``, U and V unimodular.

    ``D`` is diagonal with non-negative entries ``d1 | d2 | ...``.
    """
    a = _as_rows(m)
    nr = len(a)
    nc = len(a[0]) if a else 0
    U = [[int(i == j) for j in range(nr)] for i in range(nr)]
    V = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    for t in range(min(nr, nc)):
        nz = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            clean = True
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    clean = clean and a[t][j] == 0
            if not clean:
                cands = [(abs(a[i][t]), i, t) for i in range(t + 1, nr) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t + 1, nc) if a[t][j]]
                _, i1, j1 = min(cands)
                if i1 != t:
                    swap_rows(t, i1)
                else:
                    swap_cols(t, j1)
                continue
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
    return Matrix(U), Matrix(a), Matrix(V)


def _integer_rows(vectors):
    """Scale rational row vectors to integers; returns (rows, common denominator)."""
    vectors = [tuple(Fraction(x) for x in v) for v in vectors]
    d = 1
    for v in vectors:
        for x in v:
            d = lcm(d, x.denominator)
    return [[int(x * d) for x in v] for v in vectors], d


def hermite_basis(vectors, lower: bool = False) -> list[tuple]:
    """Canonical Z-basis (row Hermite normal form) of the span of ``vectors``.

    Vectors may be rational.  With ``lower=False`` the basis is upper echelon
    (pivot of row i strictly left of row i+1's); with ``lower=True`` the
    mirror image: each row's last nonzero entry is its positive pivot and
    entries above/below are reduced into ``[0, pivot)``.
    """
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return []
    if lower:
        flipped = hermite_basis([v[::-1] for v in vectors], lower=False)
        return [v[::-1] for v in reversed(flipped)]
    rows, d = _integer_rows(vectors)
    rows = [r for r in rows if any(r)]
    nc = len(vectors[0])
    out = []
    for c in range(nc):
        while True:
            nz = [i for i, r in enumerate(rows) if r[c]]
            if len(nz) <= 1:
                break
            i0 = min(nz, key=lambda i: abs(rows[i][c]))
            for i in nz:
                if i != i0:
                    q = rows[i][c] // rows[i0][c]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[i0])]
        rows = [r for r in rows if any(r)]
        nz = [i for i, r in enumerate(rows) if r[c]]
        if nz:
            piv = rows.pop(nz[0])
            out.append(piv if piv[c] > 0 else [-x for x in piv])
    # reduce entries above pivots
    for i, r in enumerate(out):
        pc = next(j for j, x in enumerate(r) if x)
        for h in range(i):
            q = out[h][pc] // r[pc]
            if q:
                out[h] = [x - q * y for x, y in zip(out[h], r)]
    return [tuple(_simplify(Fraction(x, d)) for x in r) for r in out]


def same_lattice(a, b, lower: bool = False) -> bool:
    return hermite_basis(a, lower) == hermite_basis(b, lower)


def saturate(vectors, ambient_rank: int | None = None) -> list[tuple]:
    """Hermite basis of the primitive closure ``(Q span) ∩ Z^n`` of integer vectors."""
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if not vectors:
        return []
    n = ambient_rank if ambient_rank is not None else len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ValueError("vector length does not match ambient rank")
    r = len(vectors)
    M = Matrix.from_columns(vectors)
    U, D, _ = smith_normal_form(M)
    divisors = [D[i, i] for i in range(min(D.nrows, D.ncols))]
    if r > n or any(d == 0 for d in divisors[:r]):
        raise RankDeficient("input vectors are linearly dependent")
    Uinv = U.inverse()
    cols = [Uinv.col(j) for j in range(r)]
    return hermite_basis(cols)


def elementary_divisors(vectors) -> list[int]:
    """Smith divisors of the matrix whose columns are ``vectors``."""
    M = Matrix.from_columns([tuple(v) for v in vectors])
    _, D, _ = smith_normal_form(M)
    return [D[i, i] for i in range(min(D.nrows, D.ncols))]


def solve_in_basis(basis, v):
    """Coordinates ``c`` with ``sum c_i basis_i == v`` (rational), or None."""
    B = Matrix.from_columns(basis)
    aug = [list(r) + [x] for r, x in zip(B.rows, v)]
    a, pivots = _rref(aug)
    n = len(basis)
    if n in pivots:
        return None
    coords = [Fraction(0)] * n
    for row, pc in enumerate(pivots):
        coords[pc] = a[row][n]
    if len(pivots) < n:
        raise RankDeficient("basis vectors are dependent")
    return tuple(_simplify(c) for c in coords)


def content(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g
