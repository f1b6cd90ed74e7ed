from fractions import Fraction

import pytest
import sympy as sp

from cusplab.errors import DegenerateParameter
from cusplab.polynomial import specialize_poly
from cusplab.scalars import RationalFunction, specialize_scalar
from cusplab.sqh import DISPLAYED_WEIGHT_ONE, cusp_certificate, plane_chart, vertex_chart
from cusplab.surfaces import y_quartic

from conftest import K_SYM, poly_to_sympy

K = RationalFunction.k()
k = K_SYM
W = {0: sp.Rational(1, 3), 1: sp.Rational(1, 2), 2: sp.Rational(1, 2)}


def weight_parts(expr, syms):
    out = {}
    for mono, c in sp.Poly(sp.expand(expr), *syms).terms():
        w = sum(W[i] * e for i, e in enumerate(mono))
        out[w] = out.get(w, 0) + c * sp.prod([s ** e for s, e in zip(syms, mono)])
    return out


def sympy_y_form():
    ys = sp.symbols("y0:4")
    expr, syms = poly_to_sympy(y_quartic())
    return expr.subs(dict(zip(syms, ys)), simultaneous=True), ys


def vertex_oracle():
    f, (y0, y1, y2, y3) = sympy_y_form()
    u1, u2, u3 = sp.symbols("u1 u2 u3")
    local = f.subs({y0: 1, y1: (u1 + u2 + u3) / 2, y2: (u1 - u2 + u3) / 2, y3: (u1 + u2 - u3) / 2},
                   simultaneous=True)
    return weight_parts(local, (u1, u2, u3)), (u1, u2, u3)


def plane_oracle():
    f, (y0, y1, y2, y3) = sympy_y_form()
    u, z1, z2 = sp.symbols("u z1 z2")
    c = 1 - k ** 2
    y1v, y3v = (z1 - c * u + z2) / 2, (z1 - c * u - z2) / 2
    local = f.subs({y0: (1 + k) * (u + 1), y1: y1v, y2: (1 - k) * (u - 1), y3: y3v}, simultaneous=True) / c
    return weight_parts(sp.cancel(local), (u, z1, z2)), (u, z1, z2)


def test_vertex_weight_one_part_against_sympy():
    parts, (u1, u2, u3) = vertex_oracle()
    assert min(parts) == 1
    assert sp.expand(parts[1] - ((1 - k) * u2 * u3 - u1 ** 3 / 4)) == 0
    cert = cusp_certificate("vertex")
    assert sp.expand(poly_to_sympy(cert.weight_one_part)[0].subs(
        dict(zip(poly_to_sympy(cert.weight_one_part)[1], (u1, u2, u3)))) - parts[1]) == 0


def test_plane_weight_one_part_against_sympy():
    parts, (u, z1, z2) = plane_oracle()
    assert min(parts) == 1
    assert sp.simplify(parts[1] - (2 * z1 * z2 + (1 - k ** 2) ** 2 * u ** 3 / 2)) == 0


def test_vertex_certificate():
    cert = cusp_certificate("vertex")
    assert cert.valid and cert.min_weight == 1
    assert cert.cubic_coefficient == Fraction(-1, 4)
    assert cert.product_coefficient == 1 - K
    assert cert.exceptional_k == (1,)
    # the closed form quoted for this chart carries (k - 1) where the expansion gives (1 - k)
    assert DISPLAYED_WEIGHT_ONE["vertex"].startswith("(k-1)")
    assert not cert.matches_display


def test_plane_certificate():
    cert = cusp_certificate("plane")
    assert cert.valid and cert.min_weight == 1
    assert cert.cubic_coefficient == (1 - K * K) ** 2 / 2
    assert cert.product_coefficient == 2
    assert set(cert.exceptional_k) == {-1, 1}
    assert not cert.matches_display and cert.notes


def test_vertex_quadratic_part_is_the_cone():
    cert = cusp_certificate("vertex")
    f, (y0, y1, y2, y3) = sympy_y_form()
    aff = sp.expand(f.subs(y0, 1))
    quad = sum(t for t in aff.as_ordered_terms() if sp.Poly(t, y1, y2, y3).total_degree() == 2)
    expr, syms = poly_to_sympy(cert.quadratic_part)
    assert sp.expand(expr.subs(dict(zip(syms, (y1, y2, y3)))) - quad) == 0
    assert sp.expand(quad - (1 - k) * (y1 - y2) * (y1 - y3)) == 0


@pytest.mark.parametrize("family", ["vertex", "plane"])
@pytest.mark.parametrize("t", [2, 3, -2, Fraction(1, 2), Fraction(-5, 7)])
def test_certify_then_specialise_equals_specialise_then_certify(family, t):
    generic = cusp_certificate(family)
    special = cusp_certificate(family, t)
    assert special.valid
    assert special.weight_one_part == specialize_poly(generic.weight_one_part, t)
    assert special.cubic_coefficient == specialize_scalar(generic.cubic_coefficient, t)
    assert special.product_coefficient == specialize_scalar(generic.product_coefficient, t)
    assert special.min_weight == generic.min_weight


@pytest.mark.parametrize("family", ["vertex", "plane"])
def test_degenerate_parameters(family):
    for t in (1, -1):
        with pytest.raises(DegenerateParameter):
            cusp_certificate(family, t)


def test_k_zero_is_certified_with_a_note():
    cert = cusp_certificate("vertex", 0)
    assert cert.valid and any("k = 0" in n for n in cert.notes)


def test_unknown_family():
    with pytest.raises(ValueError):
        cusp_certificate("edge")


def test_charts_are_inverse_substitutions():
    _, _, inv = vertex_chart()
    u1, u2, u3 = sp.symbols("u1 u2 u3")
    y1, y2, y3 = (u1 + u2 + u3) / 2, (u1 - u2 + u3) / 2, (u1 + u2 - u3) / 2
    env = {"y1": y1, "y2": y2, "y3": y3}
    assert [sp.expand(sp.sympify(inv[n], locals=env)) for n in ("u1", "u2", "u3")] == [u1, u2, u3]
    _, _, inv = plane_chart()
    assert set(inv) == {"u", "z1", "z2"}


def test_certificate_json():
    data = cusp_certificate("vertex").to_json()
    assert data["k"] == "generic" and data["valid"] is True
    assert data["weights"] == {"u1": "1/3", "u2": "1/2", "u3": "1/2"}
