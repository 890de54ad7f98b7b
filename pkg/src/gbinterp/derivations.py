"""Directional derivatives, derivative multi-indices and interpolation nodes.

A node prescribes values of ``D^(h) F`` at a point, where
``D^(h) = D_{u_1}^{h_1} ... D_{u_s}^{h_s}`` for the node's direction
vectors ``u_1..u_s``.  Directions are arbitrary nonzero rational vectors;
they are not normalised, and since ``D_{c u} = c D_u`` prescribed values
must be stated for the vectors as given.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from .algebra import Point, Polynomial, Scalar, make_point, scalar
from .errors import DimensionError, InvalidDirectionError, ModeError
from .linalg import rank


def _vector(u: Sequence) -> tuple:
    return tuple(scalar(x) for x in u)


@dataclass(frozen=True)
class DirectionSet:
    """Linearly independent nonzero direction vectors in ``K^n`` (possibly none)."""

    vectors: tuple
    nvars: int

    def __post_init__(self):
        vecs = tuple(_vector(u) for u in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        for u in vecs:
            if len(u) != self.nvars:
                raise DimensionError(f"direction of dimension {len(u)} in a {self.nvars}-dimensional space")
            if not any(u):
                raise InvalidDirectionError("zero direction vector")
        if len(vecs) > self.nvars or (vecs and rank(vecs) < len(vecs)):
            raise InvalidDirectionError("direction vectors are linearly dependent")

    @classmethod
    def coordinate(cls, nvars: int) -> DirectionSet:
        """The unit vectors ``e_1..e_n``."""
        return cls(tuple(tuple(int(i == j) for i in range(nvars)) for j in range(nvars)), nvars)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def partial_derivative(f: Polynomial, j: int) -> Polynomial:
    out = {}
    for alpha, c in f.terms.items():
        a = alpha[j]
        if a:
            beta = alpha[:j] + (a - 1,) + alpha[j + 1:]
            out[beta] = c * a
    return Polynomial._raw(out, f.nvars)


def directional_derivative(f: Polynomial, u: Sequence) -> Polynomial:
    """``sum_j u_j * df/dX_j``."""
    u = _vector(u)
    if len(u) != f.nvars:
        raise DimensionError(f"direction of dimension {len(u)} for {f.nvars} variables")
    if not any(u):
        raise InvalidDirectionError("zero direction vector")
    result = Polynomial.zero(f.nvars)
    for j, uj in enumerate(u):
        if uj:
            result = result + partial_derivative(f, j) * uj
    return result


def _directions(dirs) -> tuple:
    if isinstance(dirs, DirectionSet):
        return dirs.vectors
    return tuple(_vector(u) for u in dirs)


def iterated_derivative(f: Polynomial, dirs, h: Sequence[int]) -> Polynomial:
    """Apply ``D_{u_l}^{h_l}`` for the last direction first, then the others."""
    vecs = _directions(dirs)
    if len(vecs) != len(h):
        raise DimensionError(f"multi-index of length {len(h)} for {len(vecs)} directions")
    g = f
    for u, k in reversed(list(zip(vecs, h))):
        if k < 0:
            raise ValueError(f"negative derivative order in {tuple(h)}")
        for _ in range(k):
            if g.is_zero():
                return g
            g = directional_derivative(g, u)
    return g


def derivative_symbol(dirs, h: Sequence[int], nvars: int) -> Polynomial:
    """The constant-coefficient operator ``D^(h)`` as a polynomial in ``d/dX_j``.

    A term ``c * xi^gamma`` of the result stands for ``c * d^|gamma| / dX^gamma``.
    """
    vecs = _directions(dirs)
    if len(vecs) != len(h):
        raise DimensionError(f"multi-index of length {len(h)} for {len(vecs)} directions")
    sym = Polynomial.constant(1, nvars)
    for u, k in zip(vecs, h):
        if k:
            lin = Polynomial({tuple(int(i == j) for i in range(nvars)): uj for j, uj in enumerate(u)}, nvars)
            sym = sym * lin ** k
    return sym


def apply_symbol(symbol: Polynomial, beta: Sequence[int], p: Point) -> Scalar:
    """Value at ``p`` of the operator ``symbol`` applied to the monomial ``X^beta``."""
    total = mpq(0)
    for gamma, c in symbol.terms.items():
        v = c
        for b, g, x in zip(beta, gamma, p):
            if g > b:
                v = 0
                break
            if g:
                v *= factorial(b) // factorial(b - g)
            if b - g:
                v *= x ** (b - g)
        total += v
    return total


# ---------------------------------------------------------------------------
# Condition sets
# ---------------------------------------------------------------------------


def _check_lengths(H: Iterable[Sequence[int]]) -> tuple[set, int]:
    items = {tuple(h) for h in H}
    lengths = {len(h) for h in items}
    if len(lengths) > 1:
        raise DimensionError(f"multi-indices of mixed lengths {sorted(lengths)}")
    return items, lengths.pop() if lengths else 0


def is_lower_set(H: Iterable[Sequence[int]]) -> bool:
    items, _ = _check_lengths(H)
    for h in items:
        for j, a in enumerate(h):
            if a and h[:j] + (a - 1,) + h[j + 1:] not in items:
                return False
    return True


def lower_set_closure(H: Iterable[Sequence[int]]) -> set:
    """Smallest superset of ``H`` closed under componentwise decrease."""
    items, _ = _check_lengths(H)
    if not items:
        raise ValueError("empty multi-index set")
    out = set()
    for h in items:
        out.update(itertools.product(*(range(a + 1) for a in h)))
    return out


def multi_indices_up_to(s: int, b: int) -> list[tuple]:
    """All ``h`` in ``N^s`` with ``|h| <= b``, ordered by total order then lex."""
    out = [h for h in itertools.product(range(b + 1), repeat=s) if sum(h) <= b]
    out.sort(key=lambda h: (sum(h), h))
    return out


def fill_gaps(H: Iterable[Sequence[int]]) -> tuple[set, int]:
    """Complete ``H`` to every multi-index of total order at most ``max |h|``.

    Returns ``(filled, b)``; ``len(filled) == comb(s + b, s)``.
    """
    items, s = _check_lengths(H)
    if not items:
        raise ValueError("empty multi-index set")
    b = max(sum(h) for h in items)
    filled = set(multi_indices_up_to(s, b))
    assert len(filled) == comb(s + b, s)
    return filled, b


def gaps(H: Iterable[Sequence[int]]) -> set:
    items, _ = _check_lengths(H)
    filled, _ = fill_gaps(items)
    return filled - items


# ---------------------------------------------------------------------------
# Nodes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NodeSpec:
    """A point, its direction set and the prescribed derivative values.

    ``conditions`` maps multi-indices (length ``len(directions)``) to values;
    it is stored sorted by total order, then lex.
    """

    point: Point
    directions: DirectionSet
    conditions: Mapping

    def __post_init__(self):
        point = make_point(self.point)
        object.__setattr__(self, "point", point)
        dirs = self.directions
        if not isinstance(dirs, DirectionSet):
            dirs = DirectionSet(tuple(dirs), len(point))
            object.__setattr__(self, "directions", dirs)
        if dirs.nvars != len(point):
            raise DimensionError(f"directions in dimension {dirs.nvars}, point in {len(point)}")
        conds = {}
        for h, v in dict(self.conditions).items():
            h = tuple(int(a) for a in h)
            if len(h) != len(dirs):
                raise DimensionError(f"multi-index {h} for {len(dirs)} directions")
            if any(a < 0 for a in h):
                raise ValueError(f"negative derivative order in {h}")
            conds[h] = scalar(v)
        if not conds:
            raise ValueError("a node needs at least one condition")
        ordered = dict(sorted(conds.items(), key=lambda kv: (sum(kv[0]), kv[0])))
        object.__setattr__(self, "conditions", MappingProxyType(ordered))

    @classmethod
    def lagrange(cls, point: Sequence, value) -> NodeSpec:
        return cls(point, DirectionSet((), len(point)), {(): value})

    @property
    def nvars(self) -> int:
        return len(self.point)

    @property
    def max_order(self) -> int:
        return max(sum(h) for h in self.conditions)

    def indices(self) -> list[tuple]:
        return list(self.conditions)

    def require_lower_set(self):
        if not is_lower_set(self.conditions):
            missing = sorted(lower_set_closure(self.conditions) - set(self.conditions))
            raise ModeError(
                f"conditions at {tuple(str(x) for x in self.point)} are not a lower set "
                f"(missing {missing}); use birkhoff mode or supply those values")
