from fractions import Fraction

import sympy as sp
from hypothesis import settings, strategies as st

from cusplab.scalars import GaussianRational, ModP, RationalFunction, UPoly

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

K_SYM = sp.Symbol("k")


def rf_to_sympy(x):
    if isinstance(x, RationalFunction):
        num = sum(c * K_SYM**i for i, c in enumerate(x.num.coeffs))
        den = sum(c * K_SYM**i for i, c in enumerate(x.den.coeffs))
        return sp.Rational(1) * num / den
    if isinstance(x, GaussianRational):
        return sp.Rational(x.re.numerator, x.re.denominator) + sp.I * sp.Rational(
            x.im.numerator, x.im.denominator)
    if isinstance(x, ModP):
        return sp.Integer(x.value)
    x = Fraction(x)
    return sp.Rational(x.numerator, x.denominator)


def poly_to_sympy(f):
    syms = sp.symbols(" ".join(f.registry.names))
    if len(f.registry.names) == 1:
        syms = (syms,)
    total = sp.Integer(0)
    for e, c in f.terms.items():
        mono = sp.Integer(1)
        for s, n in zip(syms, e):
            mono *= s**n
        total += rf_to_sympy(c) * mono
    return total, syms


def same_sympy(a, b):
    return sp.simplify(sp.together(sp.expand(a - b))) == 0


small_ints = st.integers(-9, 9)
fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9))
gaussians = st.builds(GaussianRational, fractions, fractions)


@st.composite
def upolys(draw, max_degree=3):
    return UPoly(draw(st.lists(small_ints, min_size=0, max_size=max_degree + 1)))


@st.composite
def rational_functions(draw):
    num = draw(upolys())
    den = draw(upolys().filter(bool))
    return RationalFunction(num, den)


@st.composite
def int_matrices(draw, n=None, lo=-9, hi=9):
    n = n or draw(st.integers(1, 4))
    return [[draw(st.integers(lo, hi)) for _ in range(n)] for _ in range(n)]
