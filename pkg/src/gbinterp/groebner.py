"""Buchberger's algorithm, normal forms, staircases and ideal intersection.

The public functions take and return :class:`~gbinterp.algebra.Polynomial`
values.  Internally every monomial is a pair of Python ints:

* an *order code*, ``sum(alpha[j] * weight[j])``, whose integer order is the
  monomial order (all supported orders have linear sort keys, see
  :meth:`MonomialOrder.key`);
* a *packed exponent*, ``alpha`` in 16-bit fields, so multiplication is
  addition and divisibility is a single guarded subtraction.

A polynomial is a list of ``(code, packed, coeff)`` triples, descending.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from gmpy2 import mpq

from .algebra import GREVLEX, LEX, MonomialOrder, Polynomial, Scalar
from .errors import DimensionError, NonCofiniteError

_FIELD = 16
_FMASK = (1 << _FIELD) - 1
_MAX_EXP = 1 << (_FIELD - 2)
_DIGIT = 1 << 24


class _Ring:
    """Packing tables for ``nvars`` variables under one monomial order."""

    _cache: dict = {}

    def __new__(cls, nvars: int, order: MonomialOrder):
        key = (nvars, order)
        ring = cls._cache.get(key)
        if ring is None:
            ring = super().__new__(cls)
            ring._setup(nvars, order)
            cls._cache[key] = ring
        return ring

    def _setup(self, nvars, order):
        self.nvars = nvars
        self.order = order
        if order.kind == "block" and order.split > nvars:
            raise DimensionError(f"block split {order.split} exceeds {nvars} variables")
        width = len(order.key((0,) * nvars))
        weights = []
        for j in range(nvars):
            unit = tuple(int(i == j) for i in range(nvars))
            code = 0
            for digit in order.key(unit):
                code = code * _DIGIT + digit
            weights.append(code)
        self.width = width
        self.weights = weights
        self.shifts = [_FIELD * j for j in range(nvars)]
        self.guard = sum(1 << (_FIELD * j + _FIELD - 1) for j in range(nvars))

    def encode(self, alpha: Sequence[int]) -> tuple[int, int]:
        code = 0
        packed = 0
        for a, w, s in zip(alpha, self.weights, self.shifts):
            if a >= _MAX_EXP:
                raise OverflowError(f"exponent {a} too large for the packed representation")
            code += a * w
            packed |= a << s
        return code, packed

    def decode(self, packed: int) -> tuple:
        return tuple((packed >> s) & _FMASK for s in self.shifts)

    def lcm(self, e1: int, e2: int) -> tuple[int, int]:
        a = self.decode(e1)
        b = self.decode(e2)
        return self.encode([x if x > y else y for x, y in zip(a, b)])

    def divides(self, small: int, big: int) -> bool:
        g = self.guard
        return ((big | g) - small) & g == g

    def from_poly(self, f: Polynomial) -> list:
        out = []
        for alpha, c in f.terms.items():
            code, packed = self.encode(alpha)
            out.append((code, packed, c))
        out.sort(key=lambda t: t[0], reverse=True)
        return out

    def to_poly(self, terms: list) -> Polynomial:
        return Polynomial._raw({self.decode(e): c for _, e, c in terms}, self.nvars)


def _monic(terms: list) -> list:
    lc = terms[0][2]
    if lc == 1:
        return terms
    inv = 1 / lc
    return [(code, e, c * inv) for code, e, c in terms]


def _reduce(ring: _Ring, coef: dict, exps: dict, basis: list) -> list:
    """Full normal form of the polynomial held in ``coef``/``exps`` (consumed).

    ``basis`` holds ``(lead_code, lead_packed, tail)`` for monic polynomials.
    Returns the remainder as a descending term list.
    """
    g = ring.guard
    heap = [-code for code in coef]
    heapq.heapify(heap)
    pop, push = heapq.heappop, heapq.heappush
    rem = []
    while heap:
        code = -pop(heap)
        c = coef.pop(code, None)
        if c is None:
            continue
        e = exps[code]
        eg = e | g
        for lcode, lexp, tail in basis:
            if (eg - lexp) & g == g:
                break
        else:
            rem.append((code, e, c))
            continue
        dcode = code - lcode
        dexp = e - lexp
        for tcode, texp, tc in tail:
            m = tcode + dcode
            old = coef.get(m)
            if old is None:
                coef[m] = -c * tc
                exps[m] = texp + dexp
                push(heap, -m)
            else:
                v = old - c * tc
                if v:
                    coef[m] = v
                else:
                    del coef[m]
    return rem


def _load(terms: list) -> tuple[dict, dict]:
    coef = {}
    exps = {}
    for code, e, c in terms:
        coef[code] = c
        exps[code] = e
    return coef, exps


def _as_basis_entry(terms: list):
    return (terms[0][0], terms[0][1], terms[1:])


def _spoly(f: list, g: list, lcm_code: int, lcm_exp: int) -> tuple[dict, dict]:
    coef = {}
    exps = {}
    df_code, df_exp = lcm_code - f[0][0], lcm_exp - f[0][1]
    for code, e, c in f[1:]:
        m = code + df_code
        coef[m] = c
        exps[m] = e + df_exp
    dg_code, dg_exp = lcm_code - g[0][0], lcm_exp - g[0][1]
    for code, e, c in g[1:]:
        m = code + dg_code
        v = coef.get(m)
        if v is None:
            coef[m] = -c
            exps[m] = e + dg_exp
        else:
            v = v - c
            if v:
                coef[m] = v
            else:
                del coef[m]
    return coef, exps


def _buchberger(ring: _Ring, inputs: Iterable[list]) -> list:
    """Reduced Groebner basis (list of monic descending term lists)."""
    polys: list[list] = []
    active: list[int] = []
    pairs: dict[tuple[int, int], tuple[int, int]] = {}

    def basis_entries():
        # smallest leading monomial first: the preferred divisor
        return sorted((_as_basis_entry(polys[i]) for i in active), key=lambda t: t[0])

    def coprime(e1, e2):
        a = ring.decode(e1)
        b = ring.decode(e2)
        return all(x == 0 or y == 0 for x, y in zip(a, b))

    def update(h_index):
        # Gebauer-Moeller installation of a new basis element.
        h = polys[h_index]
        he = h[0][1]
        cands = []
        for i in active:
            lc, le = ring.lcm(he, polys[i][0][1])
            cands.append((i, lc, le, coprime(he, polys[i][0][1])))
        kept = []
        for idx, (i, lc, le, cp) in enumerate(cands):
            if cp:
                kept.append((i, lc, le, cp))
                continue
            redundant = False
            for j, (i2, lc2, le2, _) in enumerate(cands):
                if j > idx and ring.divides(le2, le):
                    redundant = True
                    break
            if not redundant:
                for i2, lc2, le2, _ in kept:
                    if ring.divides(le2, le):
                        redundant = True
                        break
            if not redundant:
                kept.append((i, lc, le, cp))
        for key, (lc, le) in list(pairs.items()):
            i, j = key
            if not ring.divides(he, le):
                continue
            lih = ring.lcm(polys[i][0][1], he)[1]
            ljh = ring.lcm(polys[j][0][1], he)[1]
            if lih != le and ljh != le:
                del pairs[key]
        for i, lc, le, cp in kept:
            if not cp:
                pairs[(i, h_index)] = (lc, le)
        active[:] = [i for i in active if not ring.divides(he, polys[i][0][1])]
        active.append(h_index)

    def add(terms):
        polys.append(_monic(terms))
        update(len(polys) - 1)

    # Reduce each input by the inputs before it, then install the survivors
    # smallest lead first without further reduction.  Reducing against the
    # growing basis here builds long chains whose coefficients explode.
    originals = [_monic(f) for f in inputs if f]
    current = []
    for k, f in enumerate(originals):
        coef, exps = _load(f)
        h = _reduce(ring, coef, exps, [_as_basis_entry(g) for g in originals[:k]])
        if h:
            current.append(h)
    for f in sorted(current, key=lambda t: t[0][0]):
        add(f)

    while pairs:
        key = min(pairs, key=lambda k: (pairs[k][0], k))
        lc, le = pairs.pop(key)
        i, j = key
        coef, exps = _spoly(polys[i], polys[j], lc, le)
        h = _reduce(ring, coef, exps, basis_entries())
        if h:
            add(h)

    # drop elements whose lead is a multiple of another lead, then interreduce
    minimal = []
    for i in sorted(active, key=lambda k: polys[k][0][0]):
        if not any(ring.divides(polys[k][0][1], polys[i][0][1]) for k in minimal):
            minimal.append(i)
    result = []
    for i in minimal:
        others = [_as_basis_entry(polys[k]) for k in minimal if k != i]
        f = polys[i]
        coef, exps = _load(f[1:])
        tail = _reduce(ring, coef, exps, others)
        result.append([f[0]] + tail)
    result.sort(key=lambda t: t[0][0])
    return result


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroebnerBasis:
    """Generators of an ideal together with the order they are a basis for."""

    generators: tuple
    order: MonomialOrder
    nvars: int
    reduced: bool = True
    _internal: list | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.nvars != self.nvars:
                raise DimensionError(f"generator in {g.nvars} variables, basis in {self.nvars}")

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def leading_exponents(self) -> list[tuple]:
        return [g.leading_exponent(self.order) for g in self.generators]

    def is_unit(self) -> bool:
        return any(g.total_degree() == 0 for g in self.generators)

    def _entries(self):
        if self._internal is None:
            ring = _Ring(self.nvars, self.order)
            entries = [_as_basis_entry(_monic(ring.from_poly(g))) for g in self.generators if g]
            object.__setattr__(self, "_internal", entries)
        return self._internal

    def to_text(self, names=None) -> list[str]:
        return [g.to_text(names, self.order) for g in self.generators]


@dataclass(frozen=True)
class Staircase:
    """The finite set of standard exponents, ascending in ``order``."""

    exponents: tuple
    order: MonomialOrder

    def __len__(self):
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __contains__(self, alpha):
        return tuple(alpha) in set(self.exponents)

    def index(self, alpha) -> int:
        return self.exponents.index(tuple(alpha))


def _check_ring(f: Polynomial, gb: GroebnerBasis):
    if f.nvars != gb.nvars:
        raise DimensionError(f"polynomial in {f.nvars} variables, basis in {gb.nvars}")


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by ``gb`` (fully reduced)."""
    _check_ring(f, gb)
    ring = _Ring(gb.nvars, gb.order)
    coef, exps = _load(ring.from_poly(f))
    return ring.to_poly(_reduce(ring, coef, exps, gb._entries()))


def buchberger(generators: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
               nvars: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    Pairs are processed by the normal strategy (smallest lcm first, ties by
    creation index) with the coprime and Gebauer-Moeller chain criteria, so
    the run is deterministic.  Zero generators are ignored; an empty input
    yields the basis of the zero ideal.
    """
    gens = list(generators)
    if nvars is None:
        if not gens:
            raise ValueError("nvars is required when no generators are given")
        nvars = gens[0].nvars
    for g in gens:
        if g.nvars != nvars:
            raise DimensionError(f"generator in {g.nvars} variables, expected {nvars}")
    ring = _Ring(nvars, order)
    internal = _buchberger(ring, (ring.from_poly(g) for g in gens if g))
    return GroebnerBasis(tuple(ring.to_poly(t) for t in internal), order, nvars)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """``lcm/lt(f) * f - lcm/lt(g) * g`` for the monic versions of ``f`` and ``g``."""
    ring = _Ring(f.nvars, order)
    a = _monic(ring.from_poly(f))
    b = _monic(ring.from_poly(g))
    lc, le = ring.lcm(a[0][1], b[0][1])
    coef, exps = _spoly(a, b, lc, le)
    return ring.to_poly(sorted(((c, exps[c], v) for c, v in coef.items()), reverse=True))


def intersect(a: GroebnerBasis, b: GroebnerBasis) -> GroebnerBasis:
    """Reduced basis of the intersection of two ideals, under ``a.order``.

    Uses one auxiliary variable ``T`` placed first: the basis of
    ``<T*a, (1-T)*b>`` under the block order (``T`` lex, then ``a.order``)
    restricted to the ``T``-free elements.
    """
    if a.nvars != b.nvars:
        raise DimensionError(f"intersecting ideals in {a.nvars} and {b.nvars} variables")
    n = a.nvars
    order = a.order
    if not a.generators or not b.generators:
        return GroebnerBasis((), order, n)
    if a.is_unit() and b.order == order:
        return b
    if b.is_unit():
        return a
    big = MonomialOrder.block(1, LEX, order)
    ring = _Ring(n + 1, big)
    t_code, t_exp = ring.encode((1,) + (0,) * n)
    lifted = []
    for g in a.generators:
        lifted.append([(code + t_code, e + t_exp, c)
                       for code, e, c in ring.from_poly(_embed(g))])
    for g in b.generators:
        base = ring.from_poly(_embed(g))
        shifted = [(code + t_code, e + t_exp, -c) for code, e, c in base]
        lifted.append(sorted(base + shifted, key=lambda t: t[0], reverse=True))
    internal = _buchberger(ring, lifted)
    keep = []
    for terms in internal:
        if terms[0][1] & _FMASK:
            continue
        keep.append(Polynomial._raw({ring.decode(e)[1:]: c for _, e, c in terms}, n))
    small = _Ring(n, order)
    keep.sort(key=lambda g: small.encode(g.leading_exponent(order))[0])
    return GroebnerBasis(tuple(keep), order, n)


def _embed(g: Polynomial) -> Polynomial:
    return Polynomial._raw({(0,) + a: c for a, c in g.terms.items()}, g.nvars + 1)


def is_cofinite(gb: GroebnerBasis) -> bool:
    leads = gb.leading_exponents()
    for i in range(gb.nvars):
        if not any(all(a == 0 for j, a in enumerate(alpha) if j != i) for alpha in leads):
            return False
    return True


def staircase_complement(gb: GroebnerBasis) -> Staircase:
    """Standard exponents: the complement of the leading-exponent mono-ideal.

    Enumerates the box below the componentwise maximum of the leading
    exponents and drops every exponent divisible by one of them.  Only
    valid for cofinite ideals, which is checked first.
    """
    n = gb.nvars
    if not is_cofinite(gb):
        raise NonCofiniteError("ideal is not cofinite: some variable has no pure power among the leading exponents")
    leads = gb.leading_exponents()
    bound = [max(alpha[i] for alpha in leads) - 1 for i in range(n)]
    if any(m < 0 for m in bound):
        return Staircase((), gb.order)
    box = itertools.product(*(range(m + 1) for m in bound))
    kept = [h for h in box if not any(all(x >= y for x, y in zip(h, alpha)) for alpha in leads)]
    kept.sort(key=gb.order.key)
    return Staircase(tuple(kept), gb.order)


def ideal_contains(gb: GroebnerBasis, f: Polynomial) -> bool:
    return normal_form(f, gb).is_zero()


def same_ideal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    """Mutual membership of generators."""
    return all(ideal_contains(b, g) for g in a.generators) and all(
        ideal_contains(a, g) for g in b.generators)
