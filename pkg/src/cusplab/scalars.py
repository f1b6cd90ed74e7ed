"""Exact coefficient domains.

Integers and rationals are the builtin ``int`` and :class:`fractions.Fraction`.
This module adds the three scalar types the rest of the package needs:

* :class:`GaussianRational` -- ``a + b*i`` with rational ``a, b``;
* :class:`RationalFunction` -- elements of ``Q(k)``, stored as a quotient of
  integer polynomials in the parameter ``k`` (see :class:`UPoly`);
* :class:`ModP` -- elements of the prime field ``F_p``.

Each domain also has a small descriptor object (``QQ``, ``QQ_I``, ``QQ_K``,
``GF(p)``) used by the polynomial parser and by specialisation maps.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BadPrime, Pole

__all__ = [
    "GaussianRational",
    "UPoly",
    "RationalFunction",
    "ModP",
    "QQ",
    "QQ_I",
    "QQ_K",
    "GF",
    "is_prime",
    "specialize_scalar",
    "to_fraction",
]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, RationalFunction) and x.is_constant():
        return x.as_fraction()
    if isinstance(x, GaussianRational) and x.im == 0:
        return x.re
    raise TypeError(f"cannot convert {x!r} to a rational")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# Gaussian rationals


@dataclass(frozen=True, eq=False)
class GaussianRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", to_fraction(self.re))
        object.__setattr__(self, "im", to_fraction(self.im))

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact")
        return GaussianRational(to_fraction(x), Fraction(0))

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Read forms like ``2``, ``-i``, ``1/2+3i``, ``1/2 - 3/4*i``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty Gaussian rational")
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s:
            raise ValueError(f"cannot read {text!r} as a Gaussian rational")
        re_part, im_part = Fraction(0), Fraction(0)
        for t in terms:
            sign = -1 if t[0] == "-" else 1
            t = t.lstrip("+-")
            try:
                if t.endswith("i"):
                    c = t[:-1].rstrip("*")
                    im_part += sign * (Fraction(c) if c else 1)
                else:
                    re_part += sign * Fraction(t)
            except ValueError:
                raise ValueError(f"cannot read {text!r} as a Gaussian rational") from None
        return cls(re_part, im_part)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """``|z|^2``."""
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return GaussianRational(1) / (self ** -e)
        result = GaussianRational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = "i" if abs(self.im) == 1 else f"{abs(self.im)}*i"
        if self.re == 0:
            return im if self.im > 0 else f"-{im}"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re} {sign} {im}"

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"


# ---------------------------------------------------------------------------
# univariate integer polynomials in k


def _trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class UPoly:
    """Integer-coefficient polynomial in ``k``; ``coeffs[i]`` multiplies ``k**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = _trim(coeffs)
        if any(not isinstance(c, int) for c in cs):
            raise TypeError("UPoly coefficients must be integers")
        self.coeffs = cs

    @classmethod
    def constant(cls, c: int) -> "UPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self) -> int:
        return self.coeffs[-1]

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return UPoly(-c for c in self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UPoly(out)

    __rmul__ = __mul__

    def scalar_div(self, c: int) -> "UPoly":
        assert all(x % c == 0 for x in self.coeffs)
        return UPoly(x // c for x in self.coeffs)

    def primitive(self) -> "UPoly":
        c = self.content()
        return self.scalar_div(c) if c > 1 else self

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def prem(self, other: "UPoly") -> "UPoly":
        """Pseudo-remainder ``lc(other)^e * self mod other``."""
        r = list(self.coeffs)
        d = other.coeffs
        lc = d[-1]
        while len(r) >= len(d) and r:
            shift = len(r) - len(d)
            top = r[-1]
            r = [c * lc for c in r]
            for i, c in enumerate(d):
                r[i + shift] -= top * c
            r = list(_trim(r))
        return UPoly(r)

    def exact_quotient(self, other: "UPoly") -> "UPoly":
        """Quotient over Z; raises if ``other`` does not divide ``self`` in Z[k]."""
        r = [Fraction(c) for c in self.coeffs]
        d = other.coeffs
        if not d:
            raise ZeroDivisionError("division by zero polynomial")
        q = [Fraction(0)] * max(len(r) - len(d) + 1, 0)
        while len(r) >= len(d) and any(r):
            shift = len(r) - len(d)
            c = r[-1] / d[-1]
            q[shift] = c
            for i, dc in enumerate(d):
                r[i + shift] -= c * dc
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        if any(r) or any(c.denominator != 1 for c in q):
            raise ArithmeticError("inexact polynomial division")
        return UPoly(int(c) for c in q)

    def gcd(self, other: "UPoly") -> "UPoly":
        """Primitive gcd over Q, normalised to positive leading coefficient."""
        a, b = self.primitive(), other.primitive()
        if not a:
            g = b
        elif not b:
            g = a
        else:
            if a.degree < b.degree:
                a, b = b, a
            while b:
                r = a.prem(b)
                a, b = b, (r.primitive() if r else r)
            g = a.primitive()
        if g and g.lc() < 0:
            g = -g
        return g

    def rational_roots(self) -> list[Fraction]:
        """All rational roots, sorted, without multiplicity."""
        cs = list(self.coeffs)
        if not cs:
            raise ValueError("zero polynomial has every root")
        roots = set()
        while cs and cs[0] == 0:
            roots.add(Fraction(0))
            cs.pop(0)
        if len(cs) <= 1:
            return sorted(roots)
        p = UPoly(cs)
        lead, const = abs(cs[-1]), abs(cs[0])
        nums = [d for d in range(1, const + 1) if const % d == 0]
        dens = [d for d in range(1, lead + 1) if lead % d == 0]
        for n in nums:
            for d in dens:
                for cand in (Fraction(n, d), Fraction(-n, d)):
                    if p(cand) == 0:
                        roots.add(cand)
        return sorted(roots)

    def format(self, var: str = "k") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            parts.append((c < 0, body))
        first_neg, first = parts[0]
        out = ("-" if first_neg else "") + first
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"UPoly({list(self.coeffs)})"

    def __str__(self):
        return self.format()


# ---------------------------------------------------------------------------
# rational functions in k

_ONE = UPoly((1,))


class RationalFunction:
    """Element of ``Q(k)`` in canonical form.

    ``num`` and ``den`` are integer polynomials, coprime over Q, with joint
    integer content 1 and ``lc(den) > 0``; equality is representation equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=_ONE, *, _normalized=False):
        if not isinstance(num, UPoly):
            num = UPoly(num) if isinstance(num, (tuple, list)) else UPoly.constant(num)
        if not isinstance(den, UPoly):
            den = UPoly(den) if isinstance(den, (tuple, list)) else UPoly.constant(den)
        if not _normalized:
            num, den = self._normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _normalize(num: UPoly, den: UPoly):
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            return UPoly(), _ONE
        if den.degree > 0:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num.exact_quotient(g), den.exact_quotient(g)
        c = gcd(num.content(), den.content())
        if c > 1:
            num, den = num.scalar_div(c), den.scalar_div(c)
        if den.lc() < 0:
            num, den = -num, -den
        return num, den

    # construction ----------------------------------------------------------
    @classmethod
    def k(cls) -> "RationalFunction":
        return cls(UPoly((0, 1)), _ONE, _normalized=True)

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(x, int):
            return cls(UPoly.constant(x), _ONE, _normalized=True)
        if isinstance(x, Fraction):
            return cls(UPoly.constant(x.numerator), UPoly.constant(x.denominator), _normalized=True)
        raise TypeError(f"cannot coerce {x!r} to a rational function")

    @classmethod
    def from_coefficients(cls, coeffs) -> "RationalFunction":
        """Polynomial in k with rational coefficients ``coeffs`` (low degree first)."""
        fr = [to_fraction(c) for c in coeffs]
        d = 1
        for c in fr:
            d = d * c.denominator // gcd(d, c.denominator)
        return cls(UPoly(int(c * d) for c in fr), UPoly.constant(d))

    # predicates ------------------------------------------------------------
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        n = self.num.coeffs[0] if self.num else 0
        return Fraction(n, self.den.coeffs[0])

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.as_fraction())
        return hash((self.num, self.den))

    # arithmetic ------------------------------------------------------------
    def __add__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            if self.den == _ONE:
                return RationalFunction(self.num + o.num, _ONE, _normalized=True)
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == _ONE and o.den == _ONE:
            return RationalFunction(self.num * o.num, _ONE, _normalized=True)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return RationalFunction.coerce(1) / (self ** -e)
        result = RationalFunction.coerce(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # specialisation --------------------------------------------------------
    def evaluate(self, at) -> Fraction:
        at = to_fraction(at)
        d = self.den(at)
        if d == 0:
            raise Pole(f"{self} has a pole at k = {at}")
        return Fraction(self.num(at)) / d

    def reduce_mod(self, at: int, p: int) -> "ModP":
        if not is_prime(p):
            raise BadPrime(f"{p} is not prime")
        den_mod = [c % p for c in self.den.coeffs]
        if not any(den_mod):
            raise BadPrime(f"denominator {self.den} vanishes identically mod {p}")
        d = self.den(at) % p
        if d == 0:
            raise Pole(f"{self} has a pole at k = {at} mod {p}")
        return ModP(self.num(at), p) / ModP(d, p)

    def compose(self, other: "RationalFunction") -> "RationalFunction":
        """Substitute ``k -> other``."""
        other = RationalFunction.coerce(other)

        def horner(poly):
            acc = RationalFunction.coerce(0)
            for c in reversed(poly.coeffs):
                acc = acc * other + c
            return acc

        return horner(self.num) / horner(self.den)

    # printing ---------------------------------------------------------------
    def __str__(self):
        if self.den == _ONE:
            return self.num.format()
        n = self.num.format()
        if len([c for c in self.num.coeffs if c]) > 1:
            n = f"({n})"
        d = self.den.format()
        if len([c for c in self.den.coeffs if c]) > 1 or self.den.degree > 0:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RationalFunction({self})"


# ---------------------------------------------------------------------------
# prime fields


class ModP:
    __slots__ = ("value", "p")

    def __init__(self, value, p: int):
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise BadPrime(f"{p} divides the denominator of {value}")
            value = value.numerator * pow(value.denominator, -1, p)
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError("mixing different prime fields")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ModP(other, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.value + o.value, self.p)

    __radd__ = __add__

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.value - o.value, self.p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return ModP(self.value * pow(o.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return ModP(other, self.p) / self

    def __pow__(self, e: int):
        if e < 0:
            return ModP(1, self.p) / ModP(pow(self.value, -e, self.p), self.p)
        return ModP(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"


# ---------------------------------------------------------------------------
# domain descriptors


class _Domain:
    """Describes a coefficient domain: literal conversion and named constants."""

    name = "?"
    symbols: dict = {}

    def convert(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def symbol(self, name):
        return self.symbols.get(name)

    def __repr__(self):
        return self.name


class _Rationals(_Domain):
    name = "QQ"

    def convert(self, x):
        return to_fraction(x)


class _GaussianRationals(_Domain):
    name = "QQ_I"

    @property
    def symbols(self):
        return {"i": GaussianRational(0, 1)}

    def convert(self, x):
        return GaussianRational.coerce(x)


class _RationalFunctions(_Domain):
    name = "QQ(k)"

    @property
    def symbols(self):
        return {"k": RationalFunction.k()}

    def convert(self, x):
        if isinstance(x, str):
            x = Fraction(x)
        return RationalFunction.coerce(x)


class GF(_Domain):
    def __init__(self, p: int):
        if not is_prime(p):
            raise BadPrime(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"

    def convert(self, x):
        if isinstance(x, ModP):
            return x
        if isinstance(x, str):
            x = Fraction(x)
        return ModP(x, self.p)

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = _Rationals()
QQ_I = _GaussianRationals()
QQ_K = _RationalFunctions()


def specialize_scalar(x, at, p: int | None = None):
    """Image of ``x`` under ``k -> at`` (in Q, or in F_p when ``p`` is given).

    Rationals and integers pass through unchanged (reduced mod p if asked).
    """
    if isinstance(x, RationalFunction):
        if p is None:
            return x.evaluate(at)
        at = to_fraction(at)
        if at.denominator % p == 0:
            raise BadPrime(f"{p} divides the denominator of k = {at}")
        return x.reduce_mod(at.numerator * pow(at.denominator, -1, p), p)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        if p is None:
            return Fraction(x)
        if not is_prime(p):
            raise BadPrime(f"{p} is not prime")
        return ModP(x, p)
    raise TypeError(f"cannot specialise {x!r}")
