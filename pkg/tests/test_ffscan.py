import itertools
from fractions import Fraction

import pytest
import sympy as sp

from cusplab.errors import BadParameter, BadPrime
from cusplab.ffscan import expected_reductions, finite_field_singular_scan, thread_count
from cusplab.surfaces import ProjectivePoint, x_quartic

from conftest import K_SYM, poly_to_sympy


def projective_points(p):
    for lead in range(4):
        for rest in itertools.product(range(p), repeat=3 - lead):
            yield (0,) * lead + (1,) + rest


def brute_force(k, p):
    """Independent oracle: sympy partials, every point of P^3(F_p)."""
    expr, syms = poly_to_sympy(x_quartic())
    expr = expr.subs(K_SYM, sp.Rational(k))
    grads = []
    for s in syms:
        d = sp.Poly(sp.diff(expr, s), *syms)
        grads.append([(m, int(sp.Rational(c).p * pow(int(sp.Rational(c).q), -1, p)) % p)
                      for m, c in d.terms()])

    def ev(terms, pt):
        return sum(c * pt[0] ** m[0] * pt[1] ** m[1] * pt[2] ** m[2] * pt[3] ** m[3]
                   for m, c in terms) % p

    return {ProjectivePoint(pt, p) for pt in projective_points(p)
            if all(ev(g, pt) == 0 for g in grads)}


@pytest.mark.parametrize("k, p", [(2, 7), (2, 11), (3, 13), (Fraction(1, 2), 11), (5, 17)])
def test_scan_agrees_with_brute_force(k, p):
    assert set(finite_field_singular_scan(k, p)) == brute_force(k, p)


@pytest.mark.parametrize("k, p", [(2, 101), (3, 103)])
def test_exactly_the_eight_expected_points(k, p):
    found = finite_field_singular_scan(k, p)
    assert len(found) == 8
    assert found == expected_reductions(k, p)


def test_scan_does_not_depend_on_the_thread_count(monkeypatch):
    one = finite_field_singular_scan(2, 31, threads=1)
    assert finite_field_singular_scan(2, 31, threads=4) == one
    monkeypatch.setenv("CUSPLAB_THREADS", "3")
    assert thread_count() == 3
    assert finite_field_singular_scan(2, 31) == one
    monkeypatch.setenv("CUSPLAB_THREADS", "many")
    assert thread_count() == 1


def test_charts_cover_projective_space_once():
    p = 5
    pts = list(projective_points(p))
    assert len(pts) == (p ** 4 - 1) // (p - 1)
    assert len({ProjectivePoint(pt, p) for pt in pts}) == len(pts)


@pytest.mark.parametrize("p", [2, 3, 4, 9, 100])
def test_bad_primes(p):
    with pytest.raises(BadPrime):
        finite_field_singular_scan(2, p)


@pytest.mark.parametrize("k, p", [(1, 7), (6, 7), (7, 7), (8, 7), (Fraction(1, 7), 7)])
def test_bad_parameters(k, p):
    with pytest.raises(BadParameter):
        finite_field_singular_scan(k, p)


def test_reductions_are_normalised():
    pts = expected_reductions(2, 101)
    assert ProjectivePoint((1, 0, 100, 0), 101) in pts
    assert all(next(c for c in pt.coords if c) == 1 for pt in pts)
