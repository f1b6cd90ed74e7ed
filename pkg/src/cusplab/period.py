"""Period relations, decomposable 2-forms and the two components of the
period domain of a fixed polarization, over the Gaussian rationals."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import NotDecomposable, NotInDomain, ZeroForm
from .linalg import Matrix
from .scalars import GaussianRational
from .torus_action import WEDGE_PAIRS

__all__ = [
    "PeriodVector", "TwoForm", "PeriodRelations", "Component",
    "ADAPTED_FORM", "ALPHA_PERP_FORM", "period_relations", "wedge",
    "decompose_two_form", "omega_alpha_component", "alpha_chart",
]

GR = GaussianRational

# x1^2 + x2^2 - x3*x4
ADAPTED_FORM = Matrix([[1, 0, 0, 0], [0, 1, 0, 0],
                       [0, 0, 0, Fraction(-1, 2)], [0, 0, Fraction(-1, 2), 0]])
# x1^2 - x2*x3, the form on the orthogonal complement of a polarization
ALPHA_PERP_FORM = Matrix([[1, 0, 0], [0, 0, Fraction(-1, 2)], [0, Fraction(-1, 2), 0]])


@dataclass(frozen=True)
class PeriodVector:
    coords: tuple

    def __post_init__(self):
        c = tuple(GR.coerce(x) for x in self.coords)
        if not any(c):
            raise ZeroForm("period vector must be nonzero")
        object.__setattr__(self, "coords", c)

    def conjugate(self) -> "PeriodVector":
        return PeriodVector(tuple(c.conjugate() for c in self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def to_json(self):
        return [str(c) for c in self.coords]


@dataclass(frozen=True)
class TwoForm:
    """Coefficients on the basis e_i^e_j, (i, j) in WEDGE_PAIRS order."""

    coords: tuple

    def __post_init__(self):
        c = tuple(GR.coerce(x) for x in self.coords)
        if len(c) != 6:
            raise ValueError("a 2-form on C^4 has 6 coordinates")
        object.__setattr__(self, "coords", c)

    def matrix(self):
        A = [[GR(0)] * 4 for _ in range(4)]
        for (i, j), c in zip(WEDGE_PAIRS, self.coords):
            A[i][j] = c
            A[j][i] = -c
        return A

    def self_wedge(self) -> GaussianRational:
        """Coefficient of e1^e2^e3^e4 in w^w, divided by 2."""
        w = dict(zip(WEDGE_PAIRS, self.coords))
        return w[0, 1] * w[2, 3] - w[0, 2] * w[1, 3] + w[0, 3] * w[1, 2]

    def to_json(self):
        return [str(c) for c in self.coords]


class PeriodRelations(NamedTuple):
    selfpair: GaussianRational
    hermitian: Fraction
    valid: bool


def _bilinear(B, u, v):
    n = len(u)
    acc = GR(0)
    for i in range(n):
        for j in range(n):
            b = B[i, j]
            if b:
                acc = acc + u[i] * v[j] * b
    return acc


def period_relations(omega, form=ADAPTED_FORM) -> PeriodRelations:
    """B(w, w) and B(w, conj w); valid iff the first is 0 and the second positive."""
    w = omega if isinstance(omega, PeriodVector) else PeriodVector(tuple(omega))
    B = Matrix(form)
    if not B.is_symmetric():
        raise ValueError("form must be symmetric")
    if B.det() == 0:
        raise ValueError("form must be nondegenerate")
    selfpair = _bilinear(B, w.coords, w.coords)
    h = _bilinear(B, w.coords, w.conjugate().coords)
    if h.im != 0:
        raise ArithmeticError("hermitian pairing is not real")
    return PeriodRelations(selfpair, h.re, selfpair == 0 and h.re > 0)


def wedge(z1, z2) -> TwoForm:
    z1 = [GR.coerce(x) for x in z1]
    z2 = [GR.coerce(x) for x in z2]
    return TwoForm(tuple(z1[i] * z2[j] - z1[j] * z2[i] for i, j in WEDGE_PAIRS))


def decompose_two_form(w) -> tuple:
    """Covectors (z1, z2) with z1^z2 = w."""
    w = w if isinstance(w, TwoForm) else TwoForm(tuple(w))
    if not any(w.coords):
        raise ZeroForm("cannot decompose the zero form")
    if w.self_wedge():
        raise NotDecomposable("w^w != 0")
    A = w.matrix()
    i, j = next((i, j) for i, j in WEDGE_PAIRS if A[i][j])
    # rows i, j of the matrix are contractions of w; row_i ^ row_j = A_ij * w
    z1 = tuple(-x / A[i][j] for x in A[j])
    z2 = tuple(A[i])
    if wedge(z1, z2) != w:
        raise NotDecomposable("re-expansion does not reproduce the form")
    return z1, z2


class Component(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"


def alpha_chart(c1) -> PeriodVector:
    """The point (c1, c1^2, 1) of the quadric orthogonal to a polarization."""
    c1 = GR.coerce(c1)
    return PeriodVector((c1, c1 * c1, GR(1)))


def omega_alpha_component(omega) -> Component:
    """Which half (Im c1 > 0 or < 0) of the chart the period lies in."""
    if not isinstance(omega, PeriodVector):
        omega = alpha_chart(omega)
    c1, c2, c3 = omega.coords
    if c3 != 1 or c2 != c1 * c1:
        raise NotInDomain("expected a point of the form (c1, c1^2, 1)")
    rel = period_relations(omega, ALPHA_PERP_FORM)
    if c1.im == 0 or not rel.valid:
        raise NotInDomain("Im(c1) = 0: the period relations fail")
    return Component.UPPER if c1.im > 0 else Component.LOWER
