"""The sextic family in P5, its projection from a cusp, and the projected quartics.

All polynomials live over Q(k).  x-coordinates on P3 are (x0, x1, x2, x3),
named after the surviving sextic coordinates (x2, x3, x5, x6) in that
order; y-coordinates are y0 = (1+k)x0, y1 = (1+k)x1, y2 = (1-k)x2,
y3 = (1-k)x3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import CenterOfProjection, IndeterminatePoint
from .linalg import rank
from .polynomial import (MultiPoly, Registry, eliminate_pair, parse_poly,
                         partial, substitute)
from .report import Report
from .scalars import QQ, QQ_K, RationalFunction, specialize_scalar

__all__ = [
    "SEXTIC_VARS", "X_VARS", "Y_VARS", "SexticSystem", "ProjectivePoint",
    "SingularityReport", "ProjectedQuartic", "sextic_system", "nine_cusps",
    "cusp_checks", "jacobian_rank", "project_point", "projected_quartic",
    "consistency_identity", "x_quartic", "y_quartic", "eight_points",
    "x_to_y", "singular_points_symbolic", "control_point_report",
    "case_identities", "exceptional_lines", "symmetry_check",
    "DISPLAYED_X_QUARTIC", "DISPLAYED_Y_QUARTIC", "CENTER",
]

SEXTIC_VARS = Registry("x1 x2 x3 x4 x5 x6")
RAY_VARS = Registry("lam mu x2 x3 x5 x6")
X_VARS = Registry("x0 x1 x2 x3")
Y_VARS = Registry("y0 y1 y2 y3")

K = RationalFunction.k()

SEXTIC_P = "x1 + x2 + x3 + x4 + x5 + x6"
SEXTIC_Q = "(1+k)*(x1*x2 + x1*x3 + x2*x3) + (1-k)*(x4*x5 + x4*x6 + x5*x6)"
SEXTIC_C = "(1+k)^2*x1*x2*x3 + (1-k)^2*x4*x5*x6"

# coefficient forms of the restricted equations on a ray, with sigma spelled out
SIGMA = "(-1/2)*(x2 + x3 + x5 + x6)"
DISPLAYED_Q_RAY = (
    "(1+k)*(x2 + x3) - (1-k)*(x5 + x6)",
    f"(1+k)*({SIGMA}*(x2 + x3) + x2*x3) + (1-k)*({SIGMA}*(x5 + x6) + x5*x6)",
)
DISPLAYED_C_RAY = (
    "(1+k)^2*x2*x3 - (1-k)^2*x5*x6",
    f"{SIGMA}*((1+k)^2*x2*x3 + (1-k)^2*x5*x6)",
)

DISPLAYED_X_QUARTIC = (
    "(1+k)^3*x0^2*x1^2 + 2*k*(1-k^2)*x0*x1*x2*x3 - (1-k)^3*x2^2*x3^2"
    " + (1-k^2)*(x0 + x1 + x2 + x3)*((1-k)*x2*x3*(x0 + x1) - (1+k)*x0*x1*(x2 + x3))"
)
DISPLAYED_Y_QUARTIC = (
    "(1-k)*y0^2*y1^2 + 2*k*y0*y1*y2*y3 - (1+k)*y2^2*y3^2"
    " + ((1-k)*(y0 + y1) + (1+k)*(y2 + y3))*((y0 + y1)*y2*y3 - (y2 + y3)*y0*y1)"
)


def _ratio(a: MultiPoly, b: MultiPoly):
    """Scalar c with a == c*b, or None."""
    if not b:
        return None
    e, cb = next(iter(b.sorted_terms()))
    ca = a.terms.get(e)
    if ca is None:
        return None
    c = ca / cb
    return c if a == b * c else None


# ---------------------------------------------------------------------------
# points


@dataclass(frozen=True)
class ProjectivePoint:
    """Point with first nonzero coordinate 1; ``p`` marks coordinates mod p."""

    coords: tuple
    p: int | None = None

    def __post_init__(self):
        cs = tuple(self.coords)
        if self.p is not None:
            cs = tuple(int(c) % self.p for c in cs)
            lead = next((c for c in cs if c), None)
            if lead is None:
                raise ValueError("projective point with all coordinates zero")
            inv = pow(lead, -1, self.p)
            cs = tuple(c * inv % self.p for c in cs)
        else:
            lead = next((c for c in cs if c), None)
            if lead is None:
                raise ValueError("projective point with all coordinates zero")
            if isinstance(lead, int):
                lead = Fraction(lead)
            cs = tuple(_clean(c / lead) if c else _clean(c * 0) for c in cs)
        object.__setattr__(self, "coords", cs)

    @classmethod
    def of(cls, *coords, p=None):
        return cls(tuple(coords), p)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def reduce(self, p: int, k=None) -> "ProjectivePoint":
        """Image mod p (rational-function coordinates need ``k``)."""
        out = []
        for c in self.coords:
            if isinstance(c, RationalFunction):
                out.append(int(specialize_scalar(c, k, p)))
            else:
                c = Fraction(c)
                out.append(c.numerator * pow(c.denominator, -1, p) % p)
        return ProjectivePoint(tuple(out), p)

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    def to_json(self):
        return [str(c) for c in self.coords]

    def sort_key(self):
        return tuple(str(c) if isinstance(c, RationalFunction) else c for c in self.coords)


def _clean(c):
    if isinstance(c, RationalFunction) and c.is_constant():
        c = c.as_fraction()
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


# ---------------------------------------------------------------------------
# the sextic


@dataclass(frozen=True)
class SexticSystem:
    P: MultiPoly
    Q: MultiPoly
    C: MultiPoly

    @property
    def equations(self):
        return (self.P, self.Q, self.C)


@lru_cache(maxsize=None)
def sextic_system() -> SexticSystem:
    return SexticSystem(*(parse_poly(t, SEXTIC_VARS, QQ_K)
                          for t in (SEXTIC_P, SEXTIC_Q, SEXTIC_C)))


CENTER = ProjectivePoint.of(1, 0, 0, -1, 0, 0)


def nine_cusps() -> list[ProjectivePoint]:
    pts = []
    for i in range(3):
        for j in range(3, 6):
            c = [0] * 6
            c[i], c[j] = 1, -1
            pts.append(ProjectivePoint(tuple(c)))
    return pts


def jacobian_rank(point, k=None) -> int:
    """Rank of the 3x6 Jacobian of (P, Q, C) at a point (over Q(k), or at k)."""
    S = sextic_system()
    rows = []
    for eq in S.equations:
        row = []
        for name in SEXTIC_VARS.names:
            d = partial(eq, name)
            if k is not None:
                d = d.map_coefficients(lambda c: specialize_scalar(c, k), QQ)
            row.append(d.evaluate(tuple(point)))
        rows.append(row)
    return rank(rows)


def cusp_checks() -> list[dict]:
    S = sextic_system()
    out = []
    for pt in nine_cusps():
        vals = [eq.evaluate(pt.coords) for eq in S.equations]
        out.append({"point": pt, "values": [str(v) for v in vals],
                    "on_surface": all(v == 0 for v in vals),
                    "jacobian_rank": jacobian_rank(pt.coords)})
    return out


def project_point(x) -> ProjectivePoint:
    pt = x if isinstance(x, ProjectivePoint) else ProjectivePoint(tuple(x))
    if len(pt) != 6:
        raise ValueError("expected a point of P5")
    if pt == CENTER:
        raise CenterOfProjection("the center of projection has no image")
    c = pt.coords
    image = (c[1], c[2], c[4], c[5])
    if not any(image):
        raise IndeterminatePoint("image coordinates (x2:x3:x5:x6) all vanish")
    return ProjectivePoint(image)


# ---------------------------------------------------------------------------
# projection by elimination


@dataclass(frozen=True)
class ProjectedQuartic:
    coords: str
    computed: MultiPoly          # elimination determinant in these coordinates
    displayed: MultiPoly         # the closed form being matched
    scalar: object               # computed == scalar * displayed
    checks: dict = field(default_factory=dict)

    @property
    def polynomial(self) -> MultiPoly:
        return self.displayed

    @property
    def matches(self) -> bool:
        return self.scalar is not None and all(self.checks.values())


@lru_cache(maxsize=None)
def _ray_restrictions():
    S = sextic_system()
    reg = RAY_VARS
    lam, mu, x2, x3, x5, x6 = (MultiPoly.var(reg, n, QQ_K) for n in reg.names)
    sigma = (x2 + x3 + x5 + x6) * Fraction(-1, 2)
    ray = {"x1": lam + mu * sigma, "x2": mu * x2, "x3": mu * x3,
           "x4": -lam + mu * sigma, "x5": mu * x5, "x6": mu * x6}
    Qr = substitute(S.Q, ray, reg).divide_by_monomial(mu=1)
    Cr = substitute(S.C, ray, reg).divide_by_monomial(mu=2)
    return Qr, Cr


def _ray_display_checks(Qr, Cr):
    rest = RAY_VARS.without("lam", "mu")
    out = {}
    for label, L, texts in (("Q", Qr, DISPLAYED_Q_RAY), ("C", Cr, DISPLAYED_C_RAY)):
        parts = L.coefficients_in(["lam", "mu"])
        zero = MultiPoly(rest, {}, QQ_K)
        out[f"{label} restriction, lam coefficient"] = (
            parts.get((1, 0), zero) == parse_poly(texts[0], rest, QQ_K))
        out[f"{label} restriction, mu coefficient"] = (
            parts.get((0, 1), zero) == parse_poly(texts[1], rest, QQ_K))
        out[f"{label} restriction linear in (lam, mu)"] = set(parts) <= {(1, 0), (0, 1)}
    return out


@lru_cache(maxsize=None)
def _x_elimination() -> MultiPoly:
    Qr, Cr = _ray_restrictions()
    det = eliminate_pair(Qr, Cr, "lam", "mu")
    return det.rename(X_VARS)


@lru_cache(maxsize=None)
def x_quartic() -> MultiPoly:
    return parse_poly(DISPLAYED_X_QUARTIC, X_VARS, QQ_K)


@lru_cache(maxsize=None)
def y_quartic() -> MultiPoly:
    return parse_poly(DISPLAYED_Y_QUARTIC, Y_VARS, QQ_K)


def _y_of_x():
    x0, x1, x2, x3 = (MultiPoly.var(X_VARS, n, QQ_K) for n in X_VARS.names)
    return {"y0": x0 * (1 + K), "y1": x1 * (1 + K), "y2": x2 * (1 - K), "y3": x3 * (1 - K)}


def _x_of_y():
    y0, y1, y2, y3 = (MultiPoly.var(Y_VARS, n, QQ_K) for n in Y_VARS.names)
    return {"x0": y0 / (1 + K), "x1": y1 / (1 + K), "x2": y2 / (1 - K), "x3": y3 / (1 - K)}


@lru_cache(maxsize=None)
def projected_quartic(coords: str = "x") -> ProjectedQuartic:
    if coords not in ("x", "y"):
        raise ValueError("coords must be 'x' or 'y'")
    Qr, Cr = _ray_restrictions()
    checks = _ray_display_checks(Qr, Cr)
    det_x = _x_elimination()
    if coords == "x":
        computed, displayed = det_x, x_quartic()
    else:
        computed = substitute(det_x, _x_of_y(), Y_VARS)
        displayed = y_quartic()
    scalar = _ratio(computed, displayed)
    checks["homogeneous of degree 4"] = computed.is_homogeneous(4) and computed.total_degree() == 4
    checks["same monomial support as the closed form"] = set(computed.terms) == set(displayed.terms)
    euler = sum((MultiPoly.var(computed.registry, n, QQ_K) * partial(computed, n)
                 for n in computed.registry.names), MultiPoly(computed.registry, {}, QQ_K))
    checks["Euler identity"] = euler == computed * 4
    checks["proportional to the closed form"] = scalar is not None
    return ProjectedQuartic(coords, computed, displayed, scalar, checks)


def consistency_identity():
    """f(y(x)) - (1 - k^2) F(x): returns (holds, difference)."""
    lhs = substitute(y_quartic(), _y_of_x(), X_VARS)
    diff = lhs - x_quartic() * (1 - K * K)
    return not diff, diff


def quartic_at(k, coords: str = "x"):
    """Specialisation of the closed form at a rational k, with notes."""
    k = Fraction(k)
    notes = []
    if k == 0:
        notes.append("k = 0 lies outside the sextic family (k != 0 required there)")
    if k in (1, -1):
        notes.append("k = +-1 is a degenerate parameter")
    f = x_quartic() if coords == "x" else y_quartic()
    return f.map_coefficients(lambda c: specialize_scalar(c, k), QQ), notes


# ---------------------------------------------------------------------------
# singular points


@dataclass(frozen=True)
class SingularityReport:
    point: ProjectivePoint
    coords: str
    value: object
    partials: tuple

    @property
    def singular(self) -> bool:
        return all(not d for d in self.partials)

    def to_json(self):
        return {"point": self.point.to_json(), "coords": self.coords,
                "value": str(self.value), "partials": [str(d) for d in self.partials],
                "verdict": "singular" if self.singular else "smooth"}


def eight_points() -> list[ProjectivePoint]:
    pts = [ProjectivePoint(tuple(int(i == j) for j in range(4))) for i in range(4)]
    pts += [ProjectivePoint.of(*c) for c in
            ((1, 0, -1, 0), (1, 0, 0, -1), (0, 1, -1, 0), (0, 1, 0, -1))]
    return pts


def x_to_y(pt: ProjectivePoint) -> ProjectivePoint:
    c = pt.coords
    return ProjectivePoint((c[0] * (1 + K), c[1] * (1 + K), c[2] * (1 - K), c[3] * (1 - K)))


def _report(f: MultiPoly, pt: ProjectivePoint, coords: str) -> SingularityReport:
    vals = tuple(pt.coords)
    return SingularityReport(pt, coords, f.evaluate(vals),
                             tuple(partial(f, n).evaluate(vals) for n in f.registry.names))


def singular_points_symbolic() -> list[SingularityReport]:
    """Reports for the eight points, in x-coordinates and in y-coordinates."""
    out = []
    for pt in eight_points():
        out.append(_report(x_quartic(), pt, "x"))
        out.append(_report(y_quartic(), x_to_y(pt), "y"))
    return out


def control_point_report() -> SingularityReport:
    return _report(y_quartic(), ProjectivePoint.of(1, 1, 1, 1), "y")


# ---------------------------------------------------------------------------
# the displayed identities of the case analysis


def _y_gens():
    return tuple(MultiPoly.var(Y_VARS, n, QQ_K) for n in Y_VARS.names)


def case_identities() -> Report:
    r = Report("case identities")
    f = y_quartic()
    y0, y1, y2, y3 = _y_gens()
    one = MultiPoly.constant(Y_VARS, 1, QQ_K)
    k = one * K
    s, t, p, q = y0 + y1, y2 + y3, y0 * y1, y2 * y3
    d0, d1, d2, d3 = (partial(f, n) for n in Y_VARS.names)
    lin = (1 - k) * s + (1 + k) * t

    expanded = (2 * (1 - k) * y0 * y1 * y1 + 2 * k * y1 * y2 * y3
                + (1 - k) * ((y0 + y1) * y2 * y3 - (y2 + y3) * y0 * y1)
                + ((1 - k) * (y0 + y1) + (1 + k) * (y2 + y3)) * (y2 * y3 - (y2 + y3) * y1))
    r.add("expanded first partial", d0 == expanded)
    r.add("first partial via s, t, p, q",
          d0 == 2 * ((1 - k) * p + k * q) * y1 + (1 - k) * (s * q - t * p) + lin * (q - t * y1))
    r.add("second partial via s, t, p, q",
          d1 == 2 * ((1 - k) * p + k * q) * y0 + (1 - k) * (s * q - t * p) + lin * (q - t * y0))
    factor = 2 * (1 - k) * p + 2 * k * q - lin * t
    r.add("(a) difference of first two partials factors", d0 - d1 == (y1 - y0) * factor,
          {"factor": factor})
    inserted = 2 * (1 - k) * s * q - (1 - k) * t * p + (1 + k) * t * q
    r.add("first partial after inserting the alternative", d0 - inserted == y1 * factor,
          {"remainder": "y1 * factor"})

    # the four equations in p, q and their symmetry
    st = Registry("s t p q")
    S, T, P, Qv = (MultiPoly.var(st, n, QQ_K) for n in st.names)
    kk = MultiPoly.constant(st, 1, QQ_K) * K
    eq1 = (-(1 - kk) * T, 2 * (1 - kk) * S + (1 + kk) * T)        # coefficients of p, q
    eq3 = (2 * (1 + kk) * T + (1 - kk) * S, -(1 + kk) * S)

    def swap(g):
        """(s, t, p, q, k) -> (t, s, q, p, -k)."""
        g = substitute(g, {"s": T, "t": S, "p": Qv, "q": P}, st)
        return g.map_coefficients(lambda c: c.compose(-K))

    r.add("third equation is the mirror of the first",
          swap(eq1[0] * P + eq1[1] * Qv) == eq3[0] * P + eq3[1] * Qv)
    eq2 = 2 * (1 - kk) * P + 2 * kk * Qv - ((1 - kk) * S + (1 + kk) * T) * T
    eq4 = -2 * kk * P + 2 * (1 + kk) * Qv - ((1 + kk) * T + (1 - kk) * S) * S
    r.add("fourth equation is the mirror of the second", swap(eq2) == eq4)
    D = eq1[0] * eq3[1] - eq1[1] * eq3[0]
    display_D = (1 - kk * kk) * S * T - (2 * (1 - kk) * S + (1 + kk) * T) * (2 * (1 + kk) * T + (1 - kk) * S)
    target = -2 * ((1 - kk) * S + (1 + kk) * T) ** 2
    r.add("(b) determinant D = -2((1-k)s+(1+k)t)^2", D == display_D == target, {"D": D})
    xs = tuple(MultiPoly.var(X_VARS, n, QQ_K) for n in X_VARS.names)
    sx, tx = (xs[0] + xs[1]) * (1 + K), (xs[2] + xs[3]) * (1 - K)
    r.add("(1-k)s + (1+k)t = (1-k^2)(x0+x1+x2+x3)",
          sx * (1 - K) + tx * (1 + K) == (xs[0] + xs[1] + xs[2] + xs[3]) * (1 - K * K))

    # Case I
    det_I = (1 - K) * (1 + K) - K * (-K)
    r.add("(c) Case I determinant equals 1", det_I == 1, {"determinant": det_I})
    factor23 = -2 * k * p + 2 * (1 + k) * q - lin * s
    # the mirror symmetry sends f to -f, so the sign is (y2 - y3) here
    r.add("difference of last two partials factors", d2 - d3 == (y2 - y3) * factor23,
          {"factor": factor23})
    # on the plane x0+x1+x2+x3 = 0 the linear form lin vanishes
    r.add("Case I equations hold modulo the plane",
          factor * Fraction(1, 2) - ((1 - k) * p + k * q) == -lin * t * Fraction(1, 2)
          and factor23 * Fraction(1, 2) - (-k * p + (1 + k) * q) == -lin * s * Fraction(1, 2))

    # Case II
    yy = Registry("y t q")
    Y, Tq, Qq = (MultiPoly.var(yy, n, QQ_K) for n in yy.names)
    kq = MultiPoly.constant(yy, 1, QQ_K) * K
    quad1 = (1 - kq) * Y * Y + (1 + kq) * Tq * Y - (1 + kq) * Qq
    quad2 = (kq - 2) * Y * Y - (1 + kq) * Tq * Y + (1 + kq) * Qq
    r.add("Case II quadratics add up to -y^2", quad1 + quad2 == -Y * Y)
    first = (2 * (1 + kq) * Tq + 2 * (1 - kq) * Y) * Y * Y - 2 * (1 + kq) * Y * Qq
    second = -2 * kq * Y * Y + 2 * (1 + kq) * Qq - ((1 + kq) * Tq + (1 - kq) * 2 * Y) * 2 * Y
    r.add("Case II equations reduce to the quadratics",
          first == 2 * Y * quad1 and second == 2 * quad2)

    # Case IV
    yz = Registry("y z")
    Yv, Zv = (MultiPoly.var(yz, n, QQ_K) for n in yz.names)
    kz = MultiPoly.constant(yz, 1, QQ_K) * K
    diag = {"y0": Yv, "y1": Yv, "y2": Zv, "y3": Zv}
    d0_iv = substitute(d0, diag, yz)
    d2_iv = substitute(d2, diag, yz)
    shown = (2 * (1 - kz) * Yv ** 3 + 2 * kz * Yv * Zv ** 2 + (1 - kz) * (2 * Yv * Zv ** 2 - 2 * Yv ** 2 * Zv)
             + 2 * ((1 - kz) * Yv + (1 + kz) * Zv) * (Zv ** 2 - 2 * Yv * Zv))
    r.add("Case IV first partial", d0_iv == shown)
    A = (1 - kz) * Yv ** 3 - 3 * (1 - kz) * Yv ** 2 * Zv - 3 * kz * Yv * Zv ** 2 + (1 + kz) * Zv ** 3
    B = (1 - kz) * Yv ** 3 + 3 * kz * Yv ** 2 * Zv - 3 * (1 + kz) * Yv * Zv ** 2 + (1 + kz) * Zv ** 3
    half0, half2 = d0_iv * Fraction(1, 2), d2_iv * Fraction(1, 2)
    r.add("(e) Case IV halved first partial as displayed", half0 == A,
          {"computed": half0, "displayed": A})
    r.add("(e) Case IV halved third partial as displayed", half2 == B,
          {"computed": half2, "displayed": B})
    r.add("Case IV halved third partial equals minus the display", half2 == -B)
    r.add("(d) Case IV difference is 3yz(z-y)", A - B == 3 * Yv * Zv * (Zv - Yv), {"difference": A - B})
    on_diag = substitute(A, {"z": Yv}, yz)
    r.add("Case IV at y = z gives -y^3",
          on_diag == -Yv ** 3 and substitute(B, {"z": Yv}, yz) == -Yv ** 3)
    return r


# ---------------------------------------------------------------------------
# exceptional lines and symmetries


def exceptional_lines():
    """Both lines as parametrisations (a, b) -> P3, with the restricted quartic."""
    ab = Registry("a b")
    a, b = (MultiPoly.var(ab, n, QQ_K) for n in ab.names)
    lines = {
        "(1+k)x0-(1-k)x2 = (1+k)x1-(1-k)x3 = 0": (a * (1 - K), b * (1 - K), a * (1 + K), b * (1 + K)),
        "(1+k)x0-(1-k)x3 = (1+k)x1-(1-k)x2 = 0": (a * (1 - K), b * (1 - K), b * (1 + K), a * (1 + K)),
    }
    F = x_quartic()
    out = []
    for name, par in lines.items():
        restricted = substitute(F, dict(zip(X_VARS.names, par)), ab)
        out.append({"line": name, "parametrisation": [str(c) for c in par],
                    "restriction": restricted, "contained": not restricted})
    meet = ProjectivePoint((1 - K, 1 - K, 1 + K, 1 + K))
    meet_y = x_to_y(meet)
    return out, meet, meet_y


def _swap_vars(f, pairs):
    gens = {n: MultiPoly.var(f.registry, n, f.domain) for n in f.registry.names}
    mapping = {}
    for u, v in pairs:
        mapping[u], mapping[v] = gens[v], gens[u]
    return substitute(f, mapping, f.registry)


def _negate_k(f):
    return f.map_coefficients(lambda c: c.compose(-K))


def symmetry_check() -> Report:
    r = Report("symmetries")
    f = y_quartic()
    g1 = lambda h: _swap_vars(h, [("y0", "y1")])
    g2 = lambda h: _swap_vars(h, [("y2", "y3")])
    r.add("invariant under y0 <-> y1", g1(f) == f)
    r.add("invariant under y2 <-> y3", g2(f) == f)
    r.add("the two involutions commute", g1(g2(f)) == g2(g1(f)))
    F = x_quartic()
    r.add("x-form invariant under x0 <-> x1 and x2 <-> x3",
          _swap_vars(F, [("x0", "x1")]) == F and _swap_vars(F, [("x2", "x3")]) == F)
    h = _negate_k(_swap_vars(f, [("y0", "y2"), ("y1", "y3")]))
    scalar = _ratio(h, f)
    r.add("(y0,y1) <-> (y2,y3) with k -> -k maps f to a multiple of f",
          scalar is not None, {"scalar": scalar})
    hx = _negate_k(_swap_vars(F, [("x0", "x2"), ("x1", "x3")]))
    r.add("same swap on the x-form", _ratio(hx, F) is not None, {"scalar": _ratio(hx, F)})
    pts = set(eight_points())
    perms = [(1, 0, 2, 3), (0, 1, 3, 2)]
    permuted = all({ProjectivePoint(tuple(p.coords[i] for i in perm)) for p in pts} == pts
                   for perm in perms)
    r.add("singular points permuted by the Klein four-group", permuted)
    return r
