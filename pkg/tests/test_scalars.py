from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, strategies as st

from cusplab.errors import BadPrime, Pole
from cusplab.scalars import (GF, QQ_K, GaussianRational, ModP, RationalFunction, UPoly,
                             is_prime, specialize_scalar)

from conftest import K_SYM, fractions, gaussians, rational_functions, rf_to_sympy, same_sympy

K = RationalFunction.k()


# Gaussian rationals

@given(gaussians)
def test_conjugation_is_an_involution(z):
    assert z.conjugate().conjugate() == z


@given(gaussians, gaussians)
def test_gaussian_product_matches_sympy(a, b):
    assert sp.expand(rf_to_sympy(a * b) - rf_to_sympy(a) * rf_to_sympy(b)) == 0


@given(gaussians, gaussians.filter(bool))
def test_gaussian_division_inverts_multiplication(a, b):
    assert (a / b) * b == a


@given(gaussians)
def test_norm_is_z_times_conjugate(z):
    assert z * z.conjugate() == z.norm()


@given(gaussians)
def test_gaussian_text_round_trip(z):
    assert GaussianRational.parse(str(z)) == z


@pytest.mark.parametrize("text, re_, im", [
    ("i", 0, 1), ("-i", 0, -1), ("3", 3, 0), ("1/2+3i", Fraction(1, 2), 3),
    ("1/2 - 3/4*i", Fraction(1, 2), Fraction(-3, 4)), ("2i+1", 1, 2),
])
def test_gaussian_parse(text, re_, im):
    assert GaussianRational.parse(text) == GaussianRational(re_, im)


@pytest.mark.parametrize("text", ["", "x", "1++i", "i2"])
def test_gaussian_parse_rejects_garbage(text):
    with pytest.raises(ValueError):
        GaussianRational.parse(text)


def test_complex_floats_are_rejected():
    with pytest.raises(TypeError):
        GaussianRational.coerce(1 + 2j)


# rational functions

@given(rational_functions(), rational_functions(), rational_functions())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0
    if a:
        assert a * (1 / a) == 1


@given(rational_functions(), rational_functions())
def test_arithmetic_matches_sympy(a, b):
    sa, sb = rf_to_sympy(a), rf_to_sympy(b)
    assert same_sympy(rf_to_sympy(a + b), sa + sb)
    assert same_sympy(rf_to_sympy(a * b), sa * sb)
    if b:
        assert same_sympy(rf_to_sympy(a / b), sa / sb)


@given(rational_functions())
def test_canonical_form(a):
    again = RationalFunction(a.num, a.den)
    assert (again.num, again.den) == (a.num, a.den)
    assert a.den.lc() > 0
    assert a.num.gcd(a.den).degree <= 0


def test_equal_values_have_equal_representations():
    a = (1 - K * K) / (1 + K)
    assert a == 1 - K
    assert hash(a) == hash(1 - K)
    assert RationalFunction(UPoly((2,)), UPoly((4, 4))) == 1 / (2 * (1 + K))


@given(rational_functions(), fractions)
def test_evaluation_matches_sympy(a, t):
    s = rf_to_sympy(a)
    den = sp.denom(sp.together(s)).subs(K_SYM, sp.Rational(t.numerator, t.denominator))
    if den == 0:
        with pytest.raises(Pole):
            a.evaluate(t)
        return
    v = s.subs(K_SYM, sp.Rational(t.numerator, t.denominator))
    assert sp.Rational(v) == sp.Rational(a.evaluate(t).numerator, a.evaluate(t).denominator)


@given(rational_functions(), rational_functions())
def test_specialisation_is_a_homomorphism(a, b):
    t = Fraction(7, 3)
    try:
        va, vb = specialize_scalar(a, t), specialize_scalar(b, t)
    except Pole:
        assume(False)
    assert specialize_scalar(a * b, t) == va * vb
    assert specialize_scalar(a + b, t) == va + vb


@given(rational_functions(), rational_functions())
def test_reduction_mod_p_is_a_homomorphism(a, b):
    try:
        va, vb = specialize_scalar(a, 5, 101), specialize_scalar(b, 5, 101)
    except Pole:
        assume(False)
    assert specialize_scalar(a * b, 5, 101) == va * vb
    assert specialize_scalar(a - b, 5, 101) == va - vb


def test_specialisation_examples():
    assert specialize_scalar((1 - K * K) / (1 + K), 2) == -1
    with pytest.raises(Pole):
        specialize_scalar(1 / (1 - K), 1)
    assert specialize_scalar((1 + K) ** 3, 2, 101) == ModP(27, 101)


def test_specialisation_mod_p_detects_poles_and_bad_primes():
    with pytest.raises(Pole):
        specialize_scalar(1 / (1 - K), 102, 101)
    with pytest.raises(BadPrime):
        specialize_scalar(Fraction(1, 3), 0, 9)
    with pytest.raises(BadPrime):
        specialize_scalar(K, Fraction(1, 101), 101)


def test_composition_with_minus_k():
    f = (1 + K) / (1 - K)
    assert f.compose(-K) == (1 - K) / (1 + K)


def test_rational_roots():
    assert UPoly((-1, 0, 1)).rational_roots() == [-1, 1]
    assert UPoly((1, 0, 1)).rational_roots() == []
    assert UPoly((-1, 2)).rational_roots() == [Fraction(1, 2)]


def test_domain_symbol_and_constants():
    assert QQ_K.symbol("k") == K
    assert QQ_K.convert("1/2") == Fraction(1, 2)
    assert GF(7).one == ModP(1, 7)


# prime fields

@given(st.integers(-500, 500), st.integers(-500, 500))
def test_mod_p_arithmetic(a, b):
    p = 101
    x, y = ModP(a, p), ModP(b, p)
    assert (x * y).value == (a * b) % p
    assert (x - y).value == (a - b) % p
    if b % p:
        assert (x / y) * y == x


def test_mod_p_rejects_mixed_fields():
    with pytest.raises(ValueError):
        ModP(1, 5) + ModP(1, 7)


@pytest.mark.parametrize("n, expected", [(1, False), (2, True), (9, False), (101, True), (103, True)])
def test_is_prime(n, expected):
    assert is_prime(n) is expected


def test_gf_requires_a_prime():
    with pytest.raises(BadPrime):
        GF(10)
