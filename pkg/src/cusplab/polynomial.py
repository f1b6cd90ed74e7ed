"""Sparse multivariate polynomials over exact coefficient domains.

A :class:`MultiPoly` is a map from exponent tuples to nonzero coefficients,
tied to a :class:`Registry` (ordered variable names) and a coefficient domain
from :mod:`cusplab.scalars`.  Printing uses graded-lexicographic order
(highest degree first) and the text grammar accepted by :func:`parse_poly`::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | factor
    factor := base ('^' nat)?
    base   := int | name | '(' expr ')'

Division is only accepted when the divisor is a nonzero constant, so
``3/4*x0`` and ``(1 + k)/(1 - k)*y0`` parse but ``x0/x1`` does not.
Implicit multiplication is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (NotLinearInPair, PolySyntaxError, RegistryMismatch,
                     UnknownVariable)
from .scalars import (QQ, QQ_K, GaussianRational, ModP, RationalFunction,
                      specialize_scalar, GF)

__all__ = [
    "Registry",
    "MultiPoly",
    "WeightedJet",
    "polys",
    "parse_poly",
    "substitute",
    "partial",
    "weighted_parts",
    "eliminate_pair",
    "specialize_poly",
    "to_latex",
]


class Registry:
    """Ordered, duplicate-free tuple of variable names."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(name) from None

    def __contains__(self, name):
        return name in self._index

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other):
        return isinstance(other, Registry) and other.names == self.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Registry({' '.join(self.names)!r})"

    def without(self, *names) -> "Registry":
        for n in names:
            self.index(n)
        return Registry([n for n in self.names if n not in names])


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _grlex_key(exp):
    return (sum(exp), exp)


class MultiPoly:
    __slots__ = ("registry", "terms", "domain")

    def __init__(self, registry: Registry, terms=None, domain=QQ):
        self.registry = registry
        self.domain = domain
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    # construction -----------------------------------------------------------
    @classmethod
    def constant(cls, registry, c, domain=QQ):
        return cls(registry, {(0,) * len(registry): domain.convert(c)}, domain)

    @classmethod
    def var(cls, registry, name, domain=QQ):
        e = [0] * len(registry)
        e[registry.index(name)] = 1
        return cls(registry, {tuple(e): domain.one}, domain)

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.registry != self.registry:
                raise RegistryMismatch(f"{self.registry} vs {other.registry}")
            return other
        if isinstance(other, (int, Fraction, RationalFunction, GaussianRational, ModP)) \
                and not isinstance(other, bool):
            return MultiPoly.constant(self.registry, other, self.domain)
        return None

    def _domain_with(self, other):
        return other.domain if self.domain is QQ else self.domain

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out[e] + c if e in out else c
        return MultiPoly(self.registry, out, self._domain_with(o))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.registry, {e: -c for e, c in self.terms.items()}, self.domain)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if len(o.terms) == 1 and not any(next(iter(o.terms))):
            c = next(iter(o.terms.values()))
            return MultiPoly(self.registry, {e: a * c for e, a in self.terms.items()},
                             self._domain_with(o))
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = _add_exp(e1, e2)
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return MultiPoly(self.registry, out, self._domain_with(o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            if not other.is_constant():
                raise ZeroDivisionError("division by a non-constant polynomial")
            other = other.constant_value()
        if not other:
            raise ZeroDivisionError("division by zero")
        return self * (self.domain.one / other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = MultiPoly.constant(self.registry, 1, self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, MultiPoly) else other
        if o is None:
            return NotImplemented
        return self.registry == o.registry and self.terms == o.terms

    def __hash__(self):
        return hash((self.registry, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # inspection -------------------------------------------------------------
    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * len(self.registry), self.domain.zero)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name) -> int:
        i = self.registry.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self, degree=None) -> bool:
        degs = {sum(e) for e in self.terms}
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    def coefficient(self, **powers):
        e = [0] * len(self.registry)
        for name, p in powers.items():
            e[self.registry.index(name)] = p
        return self.terms.get(tuple(e), self.domain.zero)

    def sorted_terms(self):
        """Terms in graded-lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def coefficients_in(self, names) -> dict:
        """View as a polynomial in ``names`` with coefficients in the other variables."""
        idx = [self.registry.index(n) for n in names]
        rest = self.registry.without(*names)
        ridx = [self.registry.index(n) for n in rest.names]
        out: dict[tuple, dict] = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in idx)
            sub = tuple(e[i] for i in ridx)
            out.setdefault(key, {})[sub] = c
        return {k: MultiPoly(rest, v, self.domain) for k, v in out.items()}

    # transformations --------------------------------------------------------
    def map_coefficients(self, fn, domain=None) -> "MultiPoly":
        return MultiPoly(self.registry, {e: fn(c) for e, c in self.terms.items()},
                         domain or self.domain)

    def rename(self, names) -> "MultiPoly":
        reg = names if isinstance(names, Registry) else Registry(names)
        if len(reg) != len(self.registry):
            raise RegistryMismatch("rename must keep the number of variables")
        return MultiPoly(reg, self.terms, self.domain)

    def embed(self, registry: Registry) -> "MultiPoly":
        """Re-express in a registry containing all variables that actually occur."""
        pos = []
        for i, n in enumerate(self.registry.names):
            if n in registry:
                pos.append(registry.index(n))
            elif any(e[i] for e in self.terms):
                raise RegistryMismatch(f"variable {n!r} missing from target registry")
            else:
                pos.append(None)
        out = {}
        for e, c in self.terms.items():
            f = [0] * len(registry)
            for i, p in enumerate(pos):
                if p is not None:
                    f[p] += e[i]
            out[tuple(f)] = c
        return MultiPoly(registry, out, self.domain)

    def divide_by_monomial(self, **powers) -> "MultiPoly":
        """Exact division by a monomial; raises if some term is not divisible."""
        d = [0] * len(self.registry)
        for name, p in powers.items():
            d[self.registry.index(name)] = p
        out = {}
        for e, c in self.terms.items():
            f = tuple(x - y for x, y in zip(e, d))
            if min(f, default=0) < 0:
                raise ArithmeticError("monomial does not divide polynomial")
            out[f] = c
        return MultiPoly(self.registry, out, self.domain)

    def partial(self, name) -> "MultiPoly":
        return partial(self, name)

    def substitute(self, mapping, registry=None) -> "MultiPoly":
        return substitute(self, mapping, registry)

    def evaluate(self, point):
        """Value at a full point (sequence in registry order, or dict by name)."""
        if isinstance(point, dict):
            vals = [point[n] for n in self.registry.names]
        else:
            vals = list(point)
            if len(vals) != len(self.registry):
                raise RegistryMismatch("point has the wrong number of coordinates")
        total = self.domain.zero
        for e, c in self.terms.items():
            t = c
            for v, p in zip(vals, e):
                if p:
                    t = t * v ** p
            total = total + t
        return total

    # printing ---------------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r}, {list(self.registry.names)}, {self.domain!r})"


def polys(names, domain=QQ_K):
    """Return the generators of a polynomial ring: ``x0, x1 = polys("x0 x1")``."""
    reg = Registry(names)
    gens = tuple(MultiPoly.var(reg, n, domain) for n in reg.names)
    return gens if len(gens) > 1 else gens[0]


# ---------------------------------------------------------------------------
# formatting


def _scalar_parts(c):
    """Return ``(negative, body, compound)`` for a coefficient."""
    if isinstance(c, RationalFunction) and c.is_constant():
        c = c.as_fraction()
    if isinstance(c, GaussianRational) and c.im == 0:
        c = c.re
    if isinstance(c, (int, Fraction)):
        return c < 0, str(abs(c)), False
    if isinstance(c, ModP):
        return False, str(c.value), False
    if isinstance(c, GaussianRational):
        if c.re == 0:
            body = "i" if abs(c.im) == 1 else f"{abs(c.im)}*i"
            return c.im < 0, body, False
        return False, f"({c})", True
    if isinstance(c, RationalFunction):
        num_terms = [x for x in c.num.coeffs if x]
        if len(num_terms) == 1:
            neg = c.num.lc() < 0
            body = (-c.num if neg else c.num).format()
            if c.den.degree == 0:
                return neg, body, False
            den = c.den.format()
            if c.den.degree > 0 and len([x for x in c.den.coeffs if x]) > 1:
                den = f"({den})"
            return neg, f"{body}/{den}", False
        return False, f"({c.num.format()})" + (
            "" if c.den.degree == 0 and c.den.coeffs[0] == 1
            else "/" + (f"({c.den.format()})" if len([x for x in c.den.coeffs if x]) > 1
                        else c.den.format())), True
    raise TypeError(f"cannot format coefficient {c!r}")


def _format_monomial(names, e, latex=False):
    parts = []
    for n, p in zip(names, e):
        if not p:
            continue
        if latex:
            m = re.fullmatch(r"([A-Za-z]+)(\d+)", n)
            base = f"{m.group(1)}_{{{m.group(2)}}}" if m else n
            parts.append(base if p == 1 else f"{base}^{{{p}}}")
        else:
            parts.append(n if p == 1 else f"{n}^{p}")
    return (" " if latex else "*").join(parts)


def format_poly(f: MultiPoly) -> str:
    if not f.terms:
        return "0"
    out = []
    for i, (e, c) in enumerate(f.sorted_terms()):
        neg, body, _ = _scalar_parts(c)
        mono = _format_monomial(f.registry.names, e)
        if mono:
            text = mono if body == "1" else f"{body}*{mono}"
        else:
            text = body
        if i == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)


def _latex_scalar(c):
    neg, body, compound = _scalar_parts(c)
    if isinstance(c, RationalFunction) and not c.is_constant() and c.den.degree >= 0 \
            and not (c.den.degree == 0 and c.den.coeffs[0] == 1):
        num = (-c.num if neg else c.num).format()
        body = rf"\frac{{{num}}}{{{c.den.format()}}}"
        compound = False
    elif isinstance(c, RationalFunction) and c.is_constant():
        c = c.as_fraction()
    if isinstance(c, Fraction) and c.denominator != 1:
        body = rf"\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    body = re.sub(r"\^(\d+)", r"^{\1}", body).replace("*", " ")
    if compound:
        body = body.replace("(", r"\left(", 1)
        body = body[::-1].replace(")", r")\right"[::-1], 1)[::-1]
    return neg, body


def to_latex(f: MultiPoly) -> str:
    """LaTeX rendering with indexed variable names (``x0 -> x_{0}``)."""
    if not f.terms:
        return "0"
    out = []
    for i, (e, c) in enumerate(f.sorted_terms()):
        neg, body = _latex_scalar(c)
        mono = _format_monomial(f.registry.names, e, latex=True)
        text = (mono if body == "1" else f"{body} {mono}") if mono else body
        out.append((("-" if neg else "") if i == 0 else (" - " if neg else " + ")) + text)
    return "".join(out)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", m.start(3))
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, registry, domain):
        self.tokens = _tokenize(text)
        self.i = 0
        self.registry = registry
        self.domain = domain

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            where = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolySyntaxError(f"expected {op!r}, found {where}", tok[2])

    def parse(self):
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolySyntaxError(f"unexpected token {tok[1]!r}", tok[2])
        return f

    def expr(self):
        f = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            _, op, pos = self.take()
            g = self.unary()
            if op == "*":
                f = f * g
            else:
                if not g.is_constant():
                    raise PolySyntaxError("division by a non-constant expression", pos)
                if not g:
                    raise PolySyntaxError("division by zero", pos)
                f = f / g.constant_value()
        return f

    def unary(self):
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            return -self.unary()
        return self.factor()

    def factor(self):
        base = self.base()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                where = "end of input" if tok[0] == "end" else repr(tok[1])
                raise PolySyntaxError(f"expected a natural exponent, found {where}", tok[2])
            return base ** tok[1]
        return base

    def base(self):
        kind, val, pos = self.take()
        if kind == "int":
            return MultiPoly.constant(self.registry, val, self.domain)
        if kind == "name":
            if val in self.registry:
                return MultiPoly.var(self.registry, val, self.domain)
            sym = self.domain.symbol(val)
            if sym is not None:
                return MultiPoly.constant(self.registry, sym, self.domain)
            raise UnknownVariable(val)
        if kind == "op" and val == "(":
            f = self.expr()
            self.expect_op(")")
            return f
        where = "end of input" if kind == "end" else repr(val)
        raise PolySyntaxError(f"unexpected {where}", pos)


def parse_poly(text: str, registry, domain=QQ) -> MultiPoly:
    """Parse ``text`` into a polynomial over ``domain`` in ``registry``."""
    if not isinstance(registry, Registry):
        registry = Registry(registry)
    return _Parser(text, registry, domain).parse()


# ---------------------------------------------------------------------------
# operations


def substitute(f: MultiPoly, mapping: dict, registry=None) -> MultiPoly:
    """Ring homomorphism sending each variable named in ``mapping`` to its image.

    Variables not in ``mapping`` are sent to the variable of the same name in
    the target registry (``registry`` or the images' common registry).
    """
    images = [v for v in mapping.values() if isinstance(v, MultiPoly)]
    if registry is None:
        registry = images[0].registry if images else f.registry
    elif not isinstance(registry, Registry):
        registry = Registry(registry)
    if any(v.registry != registry for v in images):
        raise RegistryMismatch("substitution images live in different registries")
    for name in mapping:
        f.registry.index(name)
    domain = f.domain if f.domain is not QQ or not images else images[0].domain
    targets = []
    for name in f.registry.names:
        if name in mapping:
            img = mapping[name]
            if not isinstance(img, MultiPoly):
                img = MultiPoly.constant(registry, img, domain)
            targets.append(img)
        elif name in registry:
            targets.append(MultiPoly.var(registry, name, domain))
        else:
            used = any(e[f.registry.index(name)] for e in f.terms)
            if used:
                raise RegistryMismatch(f"no image for variable {name!r}")
            targets.append(None)
    powers: dict[tuple[int, int], MultiPoly] = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = targets[i] if e == 1 else power(i, e - 1) * targets[i]
        return powers[key]

    out: dict = {}
    one = (0,) * len(registry)
    for e, c in f.terms.items():
        t = MultiPoly(registry, {one: c}, domain)
        for i, p in enumerate(e):
            if p:
                t = t * power(i, p)
        for ee, cc in t.terms.items():
            out[ee] = out[ee] + cc if ee in out else cc
    return MultiPoly(registry, out, domain)


def partial(f: MultiPoly, name) -> MultiPoly:
    i = f.registry.index(name)
    out = {}
    for e, c in f.terms.items():
        if e[i]:
            g = list(e)
            g[i] -= 1
            out[tuple(g)] = c * e[i]
    return MultiPoly(f.registry, out, f.domain)


@dataclass(frozen=True)
class WeightedJet:
    """Partition of a polynomial by weighted degree ``sum w_i e_i``."""

    weights: tuple
    parts: dict
    zero: MultiPoly

    @property
    def min_weight(self):
        return min(self.parts) if self.parts else None

    def part(self, w) -> MultiPoly | None:
        return self.parts.get(Fraction(w))

    def below(self, w):
        return {x: p for x, p in self.parts.items() if x < w}

    def total(self) -> MultiPoly:
        return sum(self.parts.values(), self.zero)


def weighted_parts(f: MultiPoly, weights) -> WeightedJet:
    if isinstance(weights, dict):
        weights = [weights[n] for n in f.registry.names]
    weights = tuple(Fraction(w) for w in weights)
    if len(weights) != len(f.registry):
        raise RegistryMismatch("one weight per variable is required")
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    buckets: dict[Fraction, dict] = {}
    for e, c in f.terms.items():
        w = sum((wi * ei for wi, ei in zip(weights, e)), Fraction(0))
        buckets.setdefault(w, {})[e] = c
    parts = {w: MultiPoly(f.registry, t, f.domain) for w, t in sorted(buckets.items())}
    return WeightedJet(weights, parts, MultiPoly(f.registry, {}, f.domain))


def eliminate_pair(L1: MultiPoly, L2: MultiPoly, lam: str = "lam", mu: str = "mu") -> MultiPoly:
    """Determinant ``a1*b2 - a2*b1`` of two forms ``a_i*lam + b_i*mu``.

    The result lives in the registry without ``lam`` and ``mu``.
    """
    def split(L):
        parts = L.coefficients_in([lam, mu])
        bad = [k for k in parts if k not in ((1, 0), (0, 1))]
        if bad:
            raise NotLinearInPair(f"terms with ({lam},{mu})-exponents {bad}")
        rest = L.registry.without(lam, mu)
        zero = MultiPoly(rest, {}, L.domain)
        return parts.get((1, 0), zero), parts.get((0, 1), zero)

    a1, b1 = split(L1)
    a2, b2 = split(L2)
    return a1 * b2 - a2 * b1


def specialize_poly(f: MultiPoly, at, p: int | None = None) -> MultiPoly:
    """Coefficientwise ``k -> at`` into Q, or into F_p when ``p`` is given."""
    domain = QQ if p is None else GF(p)
    return f.map_coefficients(lambda c: specialize_scalar(c, at, p), domain)
