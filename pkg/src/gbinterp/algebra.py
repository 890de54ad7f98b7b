"""Exact rational scalars, monomial orders and sparse multivariate polynomials.

Scalars are ``gmpy2.mpq`` values.  They compare and hash equal to
``fractions.Fraction`` so callers may pass either; :func:`scalar` converts
ints, Fractions and decimal/fraction strings exactly.

Polynomials are immutable: a mapping from exponent tuples to nonzero scalars
plus a fixed variable count.  Mixing variable counts raises
:class:`DimensionError` instead of embedding.
"""

from __future__ import annotations

import numbers
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from .errors import DimensionError, ZeroPolynomialError

Scalar = type(mpq())
Exponent = tuple
Point = tuple

ZERO = mpq(0)
ONE = mpq(1)


def scalar(value) -> Scalar:
    """Convert ``value`` to an exact rational.

    Accepts ints, rationals (Fraction, mpq) and strings such as ``"1/3"``,
    ``"-0.25"`` or ``"1.5e-5"``.  Floats are rejected: they would silently
    import binary rounding error.
    """
    if isinstance(value, Scalar):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, float):
        raise TypeError(f"float {value!r} is inexact; pass a string or Fraction")
    if isinstance(value, str):
        try:
            f = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact number: {value!r}") from exc
        return mpq(f.numerator, f.denominator)
    if isinstance(value, numbers.Rational):
        return mpq(value.numerator, value.denominator)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational scalar")


def make_point(coords: Iterable) -> Point:
    return tuple(scalar(c) for c in coords)


def format_scalar(c) -> str:
    """``3``, ``-1/2``: the canonical text form of an exact rational."""
    c = scalar(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------

_KINDS = ("lex", "grlex", "grevlex", "block")


@dataclass(frozen=True)
class MonomialOrder:
    """A multiplicative well-order on exponent vectors.

    Every order is realised through :meth:`key`, a tuple of integers that is
    a *linear* function of the exponent vector; comparing keys
    lexicographically compares monomials.  Block orders concatenate the keys
    of their two inner orders, so the first ``split`` variables are
    eliminated first.
    """

    kind: str
    split: int | None = None
    first: MonomialOrder | None = None
    second: MonomialOrder | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block":
            if self.split is None or self.split < 0 or self.first is None or self.second is None:
                raise ValueError("block order needs split >= 0 and two inner orders")

    @classmethod
    def parse(cls, name: str) -> MonomialOrder:
        try:
            return _NAMED[name.lower()]
        except KeyError:
            raise ValueError(f"unknown monomial order {name!r}; expected lex, grlex or grevlex") from None

    @classmethod
    def block(cls, split: int, first: MonomialOrder | None = None, second: MonomialOrder | None = None):
        return cls("block", split, first or LEX, second or GREVLEX)

    def key(self, alpha: Sequence[int]) -> tuple:
        kind = self.kind
        if kind == "lex":
            return tuple(alpha)
        if kind == "grlex":
            return (sum(alpha),) + tuple(alpha)
        if kind == "grevlex":
            return (sum(alpha),) + tuple(-a for a in reversed(alpha))
        k = self.split
        return self.first.key(alpha[:k]) + self.second.key(alpha[k:])

    def __str__(self):
        if self.kind == "block":
            return f"block({self.split}; {self.first}, {self.second})"
        return self.kind


LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")
GREVLEX = MonomialOrder("grevlex")
_NAMED = {"lex": LEX, "grlex": GRLEX, "grevlex": GREVLEX}


def cmp_monomials(a: Sequence[int], b: Sequence[int], order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise DimensionError(f"exponent vectors of length {len(a)} and {len(b)}")
    if order.kind == "block" and order.split > len(a):
        raise DimensionError(f"block split {order.split} exceeds {len(a)} variables")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Sparse polynomial with exact rational coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None, nvars: int | None = None):
        clean = {}
        if terms:
            for alpha, c in terms.items():
                alpha = tuple(int(a) for a in alpha)
                if nvars is None:
                    nvars = len(alpha)
                elif len(alpha) != nvars:
                    raise DimensionError(f"exponent {alpha} in a ring of {nvars} variables")
                if any(a < 0 for a in alpha):
                    raise ValueError(f"negative exponent in {alpha}")
                c = scalar(c)
                if c:
                    clean[alpha] = clean.get(alpha, ZERO) + c
                    if not clean[alpha]:
                        del clean[alpha]
        if nvars is None:
            raise ValueError("nvars is required for a polynomial without terms")
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> Polynomial:
        # trusted constructor: keys are int tuples of length nvars, values nonzero mpq
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> Polynomial:
        c = scalar(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> Polynomial:
        if not 0 <= index < nvars:
            raise DimensionError(f"variable {index} outside a ring of {nvars} variables")
        alpha = tuple(int(j == index) for j in range(nvars))
        return cls._raw({alpha: ONE}, nvars)

    @classmethod
    def monomial(cls, alpha: Sequence[int], c=1) -> Polynomial:
        return cls({tuple(alpha): c}, len(alpha))

    @property
    def terms(self) -> Mapping[tuple, Scalar]:
        return MappingProxyType(self._terms)

    def coefficient(self, alpha: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(alpha), ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(a) for a in self._terms), default=-1)

    def sorted_terms(self, order: MonomialOrder = GREVLEX, descending: bool = True):
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=descending)

    def leading_exponent(self, order: MonomialOrder) -> tuple:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Scalar:
        return self._terms[self.leading_exponent(order)]

    def monic(self, order: MonomialOrder) -> Polynomial:
        if not self._terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return Polynomial._raw({a: c / lc for a, c in self._terms.items()}, self.nvars)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: Polynomial):
        if self.nvars != other.nvars:
            raise DimensionError(f"polynomials in {self.nvars} and {other.nvars} variables")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        try:
            return Polynomial.constant(scalar(other), self.nvars)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for a, c in other._terms.items():
            s = out.get(a, ZERO) + c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return Polynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({a: -c for a, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                c = scalar(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Polynomial.zero(self.nvars)
            return Polynomial._raw({a: c * v for a, v in self._terms.items()}, self.nvars)
        self._check(other)
        out = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                m = tuple(x + y for x, y in zip(a, b))
                out[m] = out.get(m, ZERO) + ca * cb
        return Polynomial._raw({m: c for m, c in out.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            return self == Polynomial.constant(scalar(other), self.nvars)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- substitution ---------------------------------------------------------

    def evaluate(self, p: Sequence) -> Scalar:
        if len(p) != self.nvars:
            raise DimensionError(f"point of dimension {len(p)} for {self.nvars} variables")
        p = [scalar(x) for x in p]
        powers = [{0: ONE} for _ in p]
        total = ZERO
        for alpha, c in self._terms.items():
            v = c
            for j, a in enumerate(alpha):
                if a:
                    cache = powers[j]
                    pw = cache.get(a)
                    if pw is None:
                        pw = cache[a] = p[j] ** a
                    v *= pw
            total += v
        return total

    def translate(self, p: Sequence) -> Polynomial:
        """The polynomial ``q -> self(q + p)``."""
        if len(p) != self.nvars:
            raise DimensionError(f"shift of dimension {len(p)} for {self.nvars} variables")
        terms = self._terms
        for j, pj in enumerate(p):
            pj = scalar(pj)
            if not pj:
                continue
            out = {}
            for alpha, c in terms.items():
                k = alpha[j]
                if k == 0:
                    out[alpha] = out.get(alpha, ZERO) + c
                    continue
                head, tail = alpha[:j], alpha[j + 1:]
                for i in range(k + 1):
                    m = head + (i,) + tail
                    out[m] = out.get(m, ZERO) + c * comb(k, i) * pj ** (k - i)
            terms = {m: c for m, c in out.items() if c}
        return Polynomial._raw(dict(terms), self.nvars)

    # -- text -----------------------------------------------------------------

    def to_text(self, names: Sequence[str] | None = None, order: MonomialOrder = GREVLEX) -> str:
        """Render as e.g. ``3/2*X^2*Y - 1`` with terms in descending order."""
        names = list(names) if names is not None else default_names(self.nvars)
        if len(names) != self.nvars:
            raise DimensionError(f"{len(names)} names for {self.nvars} variables")
        if not self._terms:
            return "0"
        parts = []
        for i, (alpha, c) in enumerate(self.sorted_terms(order)):
            factors = []
            for name, a in zip(names, alpha):
                if a == 1:
                    factors.append(name)
                elif a > 1:
                    factors.append(f"{name}^{a}")
            mag = abs(c)
            if not factors:
                body = format_scalar(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = format_scalar(mag) + "*" + "*".join(factors)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r}, nvars={self.nvars})"


def default_names(n: int) -> list[str]:
    return [f"X{j + 1}" for j in range(n)]


_SIGN_RE = re.compile(r"(?<![0-9.][eE])([+-])")


def parse_polynomial(text: str, names: Sequence[str]) -> Polynomial:
    """Parse a sum of terms such as ``3/2*X^2*Y - 1`` (the :meth:`to_text` form)."""
    names = list(names)
    index = {name: j for j, name in enumerate(names)}
    n = len(names)
    pieces = _SIGN_RE.split(text.strip())
    if pieces[0].strip() == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    terms = {}
    for sign, body in zip(pieces[::2], pieces[1::2]):
        body = body.strip()
        if not body:
            raise ValueError(f"cannot parse polynomial {text!r}")
        coeff = mpq(-1 if sign == "-" else 1)
        alpha = [0] * n
        for factor in body.split("*"):
            base, _, power = factor.strip().partition("^")
            if base in index:
                alpha[index[base]] += int(power) if power else 1
            elif power:
                raise ValueError(f"exponent on a coefficient in {text!r}")
            else:
                coeff *= scalar(base)
        key = tuple(alpha)
        terms[key] = terms.get(key, ZERO) + coeff
    return Polynomial(terms, n)


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f * g


def evaluate(f: Polynomial, p: Sequence) -> Scalar:
    return f.evaluate(p)


def translate(f: Polynomial, p: Sequence) -> Polynomial:
    return f.translate(p)


def leading_exponent(f: Polynomial, order: MonomialOrder) -> tuple:
    if order.kind == "block" and order.split > f.nvars:
        raise DimensionError(f"block split {order.split} exceeds {f.nvars} variables")
    return f.leading_exponent(order)


def monomials_of_degree(n: int, d: int) -> list[tuple]:
    """All exponent vectors in ``n`` variables with total degree ``d``, lex-descending."""
    if n == 0:
        return [()] if d == 0 else []
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return out
