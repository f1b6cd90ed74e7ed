"""Cusp certificates by the weighted-jet (SQH) recognition test.

In local coordinates (u1, u2, u3) with weights (1/3, 1/2, 1/2) a cusp is
recognised when the expansion has no monomial of weight < 1 and its
weight-1 part is a*u1^3 + b*u2*u3 with a, b nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DegenerateParameter, NotSQH
from .polynomial import MultiPoly, Registry, parse_poly, substitute, weighted_parts
from .scalars import QQ, QQ_K, RationalFunction, specialize_scalar
from .surfaces import K, y_quartic

__all__ = ["CuspCertificate", "cusp_certificate", "vertex_chart", "plane_chart",
           "DISPLAYED_WEIGHT_ONE"]

WEIGHTS = (Fraction(1, 3), Fraction(1, 2), Fraction(1, 2))

# the closed forms claimed for the weight-1 parts
DISPLAYED_WEIGHT_ONE = {
    "vertex": "(k-1)*u2*u3 - 1/4*u1^3",
    "plane": "z1*z2 - 1/4*(1-k^2)^2*u^2",
}

VERTEX_VARS = Registry("u1 u2 u3")
PLANE_VARS = Registry("u z1 z2")


@dataclass(frozen=True)
class CuspCertificate:
    family: str
    k: object
    substitution: dict
    weights: dict
    min_weight: Fraction
    weight_one_part: MultiPoly
    cubic_coefficient: object
    product_coefficient: object
    exceptional_k: tuple
    quadratic_part: MultiPoly
    displayed_weight_one: str
    matches_display: bool
    notes: tuple = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return (self.min_weight >= 1 and bool(self.cubic_coefficient)
                and bool(self.product_coefficient) and self.shape_ok)

    @property
    def shape_ok(self) -> bool:
        """Weight-1 part has no monomials besides the cube and the product."""
        cube = (3, 0, 0)
        prod = (0, 1, 1)
        return set(self.weight_one_part.terms) <= {cube, prod}

    def to_json(self):
        return {
            "family": self.family,
            "k": "generic" if self.k is None else str(self.k),
            "substitution": self.substitution,
            "weights": {n: str(w) for n, w in self.weights.items()},
            "min_weight": str(self.min_weight),
            "weight_one_part": str(self.weight_one_part),
            "cubic_coefficient": str(self.cubic_coefficient),
            "product_coefficient": str(self.product_coefficient),
            "exceptional_k": [str(x) for x in self.exceptional_k],
            "quadratic_part": str(self.quadratic_part),
            "displayed_weight_one": self.displayed_weight_one,
            "matches_display": self.matches_display,
            "valid": self.valid,
            "notes": list(self.notes),
        }


def _gens(reg, domain=QQ_K):
    return tuple(MultiPoly.var(reg, n, domain) for n in reg.names)


@lru_cache(maxsize=None)
def vertex_chart():
    """f(1, y1, y2, y3) and its expansion in (u1, u2, u3)."""
    f = y_quartic()
    loc = Registry("y1 y2 y3")
    y1, y2, y3 = _gens(loc)
    affine = substitute(f, {"y0": MultiPoly.constant(loc, 1, QQ_K), "y1": y1, "y2": y2, "y3": y3}, loc)
    u1, u2, u3 = _gens(VERTEX_VARS)
    half = Fraction(1, 2)
    sub = {"y1": (u1 + u2 + u3) * half, "y2": (u1 - u2 + u3) * half, "y3": (u1 + u2 - u3) * half}
    local = substitute(affine, sub, VERTEX_VARS)
    inverse = {"u1": "y2 + y3", "u2": "y1 - y2", "u3": "y1 - y3"}
    return affine, local, inverse


@lru_cache(maxsize=None)
def plane_chart():
    """Chart at (1:0:-1:0): coordinates x0, y1, x2, y3, then x0 = u+v, x2 = u-v, v = 1."""
    f = y_quartic()
    mixed = Registry("x0 y1 x2 y3")
    x0, y1, x2, y3 = _gens(mixed)
    g = substitute(f, {"y0": x0 * (1 + K), "y1": y1, "y2": x2 * (1 - K), "y3": y3}, mixed)
    g = g / (1 - K * K)
    loc = Registry("u y1 y3")
    u, ly1, ly3 = _gens(loc)
    one = MultiPoly.constant(loc, 1, QQ_K)
    affine = substitute(g, {"x0": u + one, "y1": ly1, "x2": u - one, "y3": ly3}, loc)
    uu, z1, z2 = _gens(PLANE_VARS)
    half = Fraction(1, 2)
    c = 1 - K * K
    sub = {"u": uu, "y1": (z1 - uu * c + z2) * half, "y3": (z1 - uu * c - z2) * half}
    local = substitute(affine, sub, PLANE_VARS)
    inverse = {"u": "u", "z1": "(1-k^2)*u + y1 + y3", "z2": "y1 - y3"}
    return affine, local, inverse


def _homogeneous_part(f: MultiPoly, d: int) -> MultiPoly:
    return MultiPoly(f.registry, {e: c for e, c in f.terms.items() if sum(e) == d}, f.domain)


def _exceptional(*coeffs):
    roots = set()
    for c in coeffs:
        if isinstance(c, RationalFunction):
            roots.update(c.num.rational_roots())
            roots.update(c.den.rational_roots())
    return tuple(sorted(roots))


def cusp_certificate(family: str, k=None) -> CuspCertificate:
    """Certificate for the vertex family or the plane family, generic or at rational k."""
    if family == "vertex":
        affine, local, inverse = vertex_chart()
        cube, prod = "u1", ("u2", "u3")
    elif family == "plane":
        affine, local, inverse = plane_chart()
        cube, prod = "u", ("z1", "z2")
    else:
        raise ValueError("family must be 'vertex' or 'plane'")
    notes = []
    if k is not None:
        k = Fraction(k)
        if k in (1, -1):
            raise DegenerateParameter(f"k = {k} is excluded")
        if k == 0:
            notes.append("k = 0 lies outside the sextic family")
        local = local.map_coefficients(lambda c: specialize_scalar(c, k), QQ)
        affine = affine.map_coefficients(lambda c: specialize_scalar(c, k), QQ)
    jet = weighted_parts(local, WEIGHTS)
    w1 = jet.part(1)
    if w1 is None:
        w1 = MultiPoly(local.registry, {}, local.domain)
    a = w1.coefficient(**{cube: 3})
    b = w1.coefficient(**{prod[0]: 1, prod[1]: 1})
    shown = parse_poly(DISPLAYED_WEIGHT_ONE[family], local.registry, QQ_K)
    if k is not None:
        shown = shown.map_coefficients(lambda c: specialize_scalar(c, k), QQ)
    if family == "plane":
        notes.append("the closed form quoted for this family is inconsistent with its own cubic term")
    cert = CuspCertificate(
        family=family, k=k,
        substitution=inverse,
        weights=dict(zip(local.registry.names, WEIGHTS)),
        min_weight=jet.min_weight,
        weight_one_part=w1,
        cubic_coefficient=a, product_coefficient=b,
        exceptional_k=_exceptional(a, b) if k is None else (),
        quadratic_part=_homogeneous_part(affine, 2),
        displayed_weight_one=DISPLAYED_WEIGHT_ONE[family],
        matches_display=(w1 == shown),
        notes=tuple(notes),
    )
    if k is not None and not cert.valid:
        raise NotSQH(f"weight-1 part {w1} is not of the form a*{cube}^3 + b*{prod[0]}*{prod[1]}")
    return cert
