"""Discriminant bookkeeping for the nine-cusp quotient and the lattice L_X.

Only Gram-level data is modelled: push-forward and pull-back between the
rescaled dual invariant lattice and L_X are the identity on dual-basis
coordinates, with the form scaled by 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import GramLattice, discriminant, dual_basis, rescale
from .linalg import Matrix
from .report import Report
from .torus_action import invariant_gram

__all__ = ["CuspLatticeConstants", "CONSTANTS", "LX_GRAM", "lx_gram",
           "invariant_lattice_LA", "verify_pushforward_iso"]


@dataclass(frozen=True)
class CuspLatticeConstants:
    d_I: int = 3 ** 9
    d_Ibar: int = 3 ** 3
    d_LX: int = -(3 ** 3)
    rank_I: int = 18
    rank_LX: int = 4
    quotient_order: int = 3 ** 3

    def consistent(self) -> bool:
        return (self.d_I == self.d_Ibar * self.quotient_order ** 2
                and self.d_LX == -self.d_Ibar)


CONSTANTS = CuspLatticeConstants()

LX_GRAM = Matrix([[0, 3, 0, 0], [3, 0, 0, 0], [0, 0, 6, 3], [0, 0, 3, 2]])


def lx_gram() -> GramLattice:
    return GramLattice(LX_GRAM, labels=("xi1", "xi2", "xi3", "xi4"))


def invariant_lattice_LA() -> GramLattice:
    return GramLattice(invariant_gram(), labels=("g1", "g2", "g3", "g4"))


def verify_pushforward_iso() -> Report:
    r = Report("quotient pushforward")
    LA = invariant_lattice_LA()
    _, dual = dual_basis(LA)
    LX = lx_gram()
    scaled = rescale(dual, 3)
    r.add("3 * dual Gram equals L_X Gram", scaled.gram == LX.gram,
          {"scaled": scaled.gram, "lx": LX.gram})

    # push-forward: identity on dual coordinates; pull-back: multiplication by 3
    basis = [Matrix.identity(4).col(i) for i in range(4)]

    def push(v):
        return tuple(v)

    def pull(v):
        return tuple(3 * x for x in v)

    r.add("push-forward scales pairings by 3",
          all(LX.pair(push(u), push(v)) == 3 * dual.pair(u, v) for u in basis for v in basis),
          {"factor": 3})
    r.add("pull-back scales pairings by 3",
          all(dual.pair(pull(u), pull(v)) == 3 * LX.pair(u, v) for u in basis for v in basis),
          {"factor": 3})
    B, _ = dual_basis(LA)
    landing = [tuple(sum(pull(u)[i] * B[i, j] for i in range(4)) for j in range(4)) for u in basis]
    r.add("pull-back lands in the invariant lattice",
          all(Fraction(x).denominator == 1 for v in landing for x in v), {"images": landing})
    r.add("push-forward after pull-back is multiplication by 3",
          all(push(pull(u)) == tuple(3 * x for x in u) for u in basis), {"factor": 3})

    d_dual = discriminant(dual)
    lhs = 3 ** 4 * d_dual
    r.add("3^4 * d(dual) = d(L_X)", lhs == discriminant(LX) == CONSTANTS.d_LX,
          {"d_dual": d_dual, "lhs": lhs, "d_LX": discriminant(LX)})
    r.add("constants consistent", CONSTANTS.consistent(),
          {"d_I": CONSTANTS.d_I, "d_Ibar": CONSTANTS.d_Ibar, "d_LX": CONSTANTS.d_LX})
    return r
