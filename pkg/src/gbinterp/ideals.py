"""Ideals of homogeneous interpolation conditions.

For a node at ``p`` the polynomials with ``D^(h) F(p) = 0`` for all
prescribed ``h`` form a cofinite ideal when the index set is a lower set
(Hermite).  With gaps (Birkhoff) the index set is first completed to every
order up to the maximum, and the ideal used is the matching power of the
maximal ideal at ``p``.  The ideal of a whole problem is the intersection
of the node ideals, folded left in node order.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .algebra import GREVLEX, MonomialOrder, Polynomial, monomials_of_degree
from .derivations import NodeSpec, apply_symbol, derivative_symbol, fill_gaps
from .errors import DimensionError, DuplicateNodeError, ModeError
from .groebner import GroebnerBasis, buchberger, intersect, staircase_complement
from .linalg import nullspace

MODES = ("lagrange", "hermite", "birkhoff")


@dataclass(frozen=True)
class NodeIdeal:
    index: int
    basis: GroebnerBasis
    codimension: int


def _shifted_power(point, e: Sequence[int]) -> Polynomial:
    """``prod_j (X_j - p_j)^e_j``."""
    return Polynomial.monomial(e).translate([-x for x in point])


def point_ideal(point, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    n = len(point)
    gens = [Polynomial.variable(j, n) - point[j] for j in range(n)]
    return buchberger(gens, order, n)


def _node_ideal(node: NodeSpec, basis: GroebnerBasis, index: int) -> NodeIdeal:
    return NodeIdeal(index, basis, len(staircase_complement(basis)))


def hermite_generators(node: NodeSpec) -> list[Polynomial]:
    """Generators of the condition ideal of a node with a lower-set index set.

    Works at the origin: for each degree ``l`` up to the node's maximum
    order, the degree-``l`` forms killed by every ``D^(h)`` with ``|h| = l``
    are the kernel of a (conditions x monomials) matrix; all forms of degree
    ``max + 1`` are added.  The generators are then shifted to the node.
    """
    node.require_lower_set()
    n = node.nvars
    zero = (0,) * len(node.directions)
    if zero not in node.conditions:
        raise ModeError("hermite conditions must include the value condition h = 0")
    r = node.max_order
    if r == 0:
        return [Polynomial.variable(j, n) - node.point[j] for j in range(n)]
    origin = (0,) * n
    gens = []
    for l in range(1, r + 1):
        alphas = monomials_of_degree(n, l)
        der = [h for h in node.conditions if sum(h) == l]
        matrix = []
        for h in der:
            sym = derivative_symbol(node.directions, h, n)
            matrix.append([apply_symbol(sym, alpha, origin) for alpha in alphas])
        for d in nullspace(matrix, ncols=len(alphas)):
            gens.append(Polynomial({alpha: c for alpha, c in zip(alphas, d) if c}, n))
    gens.extend(Polynomial.monomial(e) for e in monomials_of_degree(n, r + 1))
    if any(node.point):
        shift = [-x for x in node.point]
        gens = [g.translate(shift) for g in gens]
    return gens


def hermite_point_ideal(node: NodeSpec, order: MonomialOrder = GREVLEX, index: int = 0) -> NodeIdeal:
    basis = buchberger(hermite_generators(node), order, node.nvars)
    return _node_ideal(node, basis, index)


def birkhoff_generators(node: NodeSpec) -> list[Polynomial]:
    _, b = fill_gaps(node.conditions)
    return [_shifted_power(node.point, e) for e in monomials_of_degree(node.nvars, b + 1)]


def birkhoff_point_ideal(node: NodeSpec, order: MonomialOrder = GREVLEX, index: int = 0) -> NodeIdeal:
    """Power ``b + 1`` of the maximal ideal at the node, ``b`` the top order."""
    if len(node.directions) < node.nvars:
        warnings.warn(
            f"node {index}: {len(node.directions)} directions in {node.nvars} variables; "
            "the maximal-ideal power is smaller than the true condition ideal, so the "
            "solution has more free parameters than gaps", stacklevel=2)
    basis = buchberger(birkhoff_generators(node), order, node.nvars)
    result = _node_ideal(node, basis, index)
    _, b = fill_gaps(node.conditions)
    assert result.codimension == comb(node.nvars + b, b)
    return result


def lagrange_point_ideal(node: NodeSpec, order: MonomialOrder = GREVLEX, index: int = 0) -> NodeIdeal:
    if any(any(h) for h in node.conditions):
        raise ModeError("lagrange nodes carry only the value condition")
    return NodeIdeal(index, point_ideal(node.point, order), 1)


def node_ideal(node: NodeSpec, mode: str, order: MonomialOrder = GREVLEX, index: int = 0) -> NodeIdeal:
    if mode == "lagrange":
        return lagrange_point_ideal(node, order, index)
    if mode == "hermite":
        return hermite_point_ideal(node, order, index)
    if mode == "birkhoff":
        return birkhoff_point_ideal(node, order, index)
    raise ModeError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")


def check_nodes(nodes: Sequence[NodeSpec]) -> int:
    """Validate dimensions and distinct points; return the variable count."""
    if not nodes:
        raise ValueError("no interpolation nodes")
    n = nodes[0].nvars
    seen = {}
    for i, node in enumerate(nodes):
        if node.nvars != n:
            raise DimensionError(f"node {i} has dimension {node.nvars}, expected {n}")
        if node.point in seen:
            raise DuplicateNodeError(f"nodes {seen[node.point]} and {i} share the point "
                                     f"({', '.join(str(x) for x in node.point)})")
        seen[node.point] = i
    return n


def problem_ideal(nodes: Sequence[NodeSpec], mode: str, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced basis of the intersection of all node ideals (left fold)."""
    check_nodes(nodes)
    ideal = None
    for i, node in enumerate(nodes):
        basis = node_ideal(node, mode, order, i).basis
        ideal = basis if ideal is None else intersect(ideal, basis)
    return ideal
