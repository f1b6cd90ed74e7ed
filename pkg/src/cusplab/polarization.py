"""Polarization degrees on L_X, primitivity in the dual invariant lattice,
and the exclusion of length -12 n^2 vectors in the complement."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from .errors import NotRepresentable, ZeroVector
from .lattice import GramLattice, dual_basis, represents
from .linalg import solve_in_basis
from .quotient_correspondence import LX_GRAM, invariant_lattice_LA, lx_gram
from .torus_action import COMPLEMENT_CLASSES, wedge_gram

__all__ = [
    "PolarizationVector", "DescentCertificate", "self_intersection",
    "classify_mod6", "construct_polarization", "la_norm",
    "dual_coordinates", "is_primitive_in_dual", "elliptic_search",
    "descent_check", "complement_lattice", "non_representation",
]


@dataclass(frozen=True)
class PolarizationVector:
    n1: int
    n2: int
    n3: int
    n4: int

    def __iter__(self):
        return iter((self.n1, self.n2, self.n3, self.n4))

    @property
    def coords(self):
        return tuple(self)

    def is_primitive(self) -> bool:
        return gcd(*self.coords) == 1

    def to_json(self):
        return list(self.coords)


def self_intersection(n) -> int:
    n1, n2, n3, n4 = n
    return 6 * n1 * n2 + 6 * (n3 * n3 + n3 * n4) + 2 * n4 * n4


def classify_mod6(gram=LX_GRAM) -> set:
    """Residues mod 6 of v.G.v over all residue vectors v in (Z/6)^4."""
    G = [[int(x) for x in r] for r in gram]
    out = set()
    for v in itertools.product(range(6), repeat=4):
        out.add(sum(v[i] * G[i][j] * v[j] for i in range(4) for j in range(4)) % 6)
    return out


def construct_polarization(d: int) -> PolarizationVector:
    if d <= 0:
        raise NotRepresentable(f"degree {d} is not positive")
    if d % 6 == 0:
        v = PolarizationVector(1, d // 6, 0, 0)
    elif d % 6 == 2:
        v = PolarizationVector(1, (d - 2) // 6, 0, 1)
    else:
        raise NotRepresentable(
            f"not representable: residues mod 6 are {{0,2}}, but {d} = {d % 6} mod 6")
    if self_intersection(v) != d or lx_gram().norm(v.coords) != d:
        raise AssertionError("constructed vector failed re-verification")
    return v


def la_norm(v) -> int:
    return invariant_lattice_LA().norm(tuple(v))


def dual_coordinates(v) -> tuple:
    """Coordinates of an invariant-lattice vector in the Hermite dual basis."""
    B, _ = dual_basis(invariant_lattice_LA())
    return solve_in_basis(list(B.rows), tuple(v))


def is_primitive_in_dual(v) -> bool:
    v = tuple(v)
    if not any(v):
        raise ZeroVector("the zero vector is not primitive")
    coords = dual_coordinates(v)
    return gcd(*(int(c) for c in coords)) == 1


def complement_lattice() -> GramLattice:
    return GramLattice(wedge_gram(COMPLEMENT_CLASSES), labels=("d1", "d2"))


def elliptic_search(bound: int) -> list[tuple]:
    """All (n, k, l) in the box with 12 n^2 - 2 (k^2 - k l + l^2) = 0."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    k = np.repeat(r, len(r))
    l = np.tile(r, len(r))
    q = k * k - k * l + l * l
    targets = {6 * n * n: n for n in range(0, bound + 1)}
    hits = np.flatnonzero(np.isin(q, np.array(sorted(targets), dtype=np.int64)))
    out = []
    for h in hits:
        kk, ll = int(k[h]), int(l[h])
        n = targets[int(q[h])]
        for nn in sorted({n, -n}):
            if 12 * nn * nn - 2 * (kk * kk - kk * ll + ll * ll) == 0:
                out.append((nn, kk, ll))
    return sorted(out)


@dataclass
class DescentCertificate:
    bound: int
    residue_table: dict
    residue_step_holds: bool
    reductions: list = field(default_factory=list)
    representations: list = field(default_factory=list)
    pairs_checked: int = 0

    @property
    def passed(self) -> bool:
        return self.residue_step_holds and not self.representations


def _residue_table():
    """(n mod 3, l mod 3) -> 8 n^2 - l^2 mod 3."""
    return {(n, l): (8 * n * n - l * l) % 3 for n in range(3) for l in range(3)}


def _reduce_chain(n, l):
    chain = [(n, l)]
    while n % 3 == 0 and l % 3 == 0 and n:
        n, l = n // 3, l // 3
        chain.append((n, l))
    return chain


def descent_check(max_n: int) -> DescentCertificate:
    """Residue step plus bounded confirmation that -12 n^2 is never represented.

    A vector (k, l) of the complement has norm -2(k^2 - k l + l^2); norm
    -12 n^2 means k = (l +- m)/2 with m^2 = 24 n^2 - 3 l^2.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    table = _residue_table()
    step = all(((n == 0 and l == 0) or v != 0) for (n, l), v in table.items())
    cert = DescentCertificate(max_n, {f"{n},{l}": v for (n, l), v in table.items()}, step)
    for n in range(1, max_n + 1):
        lmax = isqrt(8 * n * n) + 1
        for l in range(-lmax, lmax + 1):
            cert.pairs_checked += 1
            m2 = 24 * n * n - 3 * l * l
            if m2 < 0:
                continue
            m = isqrt(m2)
            if m * m == m2 and (l + m) % 2 == 0:
                cert.representations.append((n, l, m))
            if n % 3 == 0 and l % 3 == 0:
                cert.reductions.append(_reduce_chain(n, l))
    return cert


def non_representation(n_values, box: int = 100):
    """represents() on the complement for -12 n^2, per n."""
    L = complement_lattice()
    return {n: represents(L, -12 * n * n, box) for n in n_values}
