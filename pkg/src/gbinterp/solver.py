"""Interpolating polynomials from the staircase basis.

Writing the unknown as ``sum_beta k_beta X^beta`` over the staircase of the
problem ideal turns every condition ``D^(h) F(p_i) = v_{i,h}`` into one
linear equation in the ``k_beta``.  Hermite and Lagrange problems give a
square regular system; Birkhoff problems give a consistent system with one
free parameter per gap.  Free parameters are set to zero in the reported
particular solution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq

from .algebra import GREVLEX, MonomialOrder, Polynomial, Scalar, format_scalar
from .derivations import NodeSpec, apply_symbol, derivative_symbol, iterated_derivative
from .errors import InconsistentSystemError, InternalInvariantError, ModeError
from .groebner import GroebnerBasis, Staircase, intersect, staircase_complement
from .ideals import MODES, check_nodes, node_ideal, problem_ideal
from .linalg import echelon, _null_vectors


@dataclass(frozen=True)
class LinearSystem:
    """One row per condition ``(node, h)``, one column per staircase exponent."""

    matrix: tuple
    rhs: tuple
    rows: tuple
    columns: tuple

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)


@dataclass(frozen=True)
class Solution:
    polynomial: Polynomial
    ideal: GroebnerBasis
    staircase: Staircase
    free_parameters: int
    nullspace: tuple
    rank: int
    nodes: tuple
    mode: str
    system: LinearSystem = field(repr=False, compare=False)

    @property
    def order(self) -> MonomialOrder:
        return self.ideal.order


def assemble_system(staircase: Staircase, nodes: Sequence[NodeSpec]) -> LinearSystem:
    """Rows in node order then (|h|, h); columns in staircase order."""
    columns = tuple(staircase.exponents)
    matrix, rhs, rows = [], [], []
    for i, node in enumerate(nodes):
        n = node.nvars
        if columns and len(columns[0]) != n:
            raise ValueError(f"node {i} has dimension {n}, staircase {len(columns[0])}")
        for h, value in node.conditions.items():
            sym = derivative_symbol(node.directions, h, n)
            matrix.append(tuple(apply_symbol(sym, beta, node.point) for beta in columns))
            rhs.append(value)
            rows.append((i, h))
    return LinearSystem(tuple(matrix), tuple(rhs), tuple(rows), columns)


def solve_exact(system: LinearSystem) -> tuple[list, list, int]:
    """Particular solution (free variables zero), nullspace basis and rank.

    Raises :class:`InconsistentSystemError` carrying the index of the
    first equation that contradicts the ones before it.
    """
    ncols = len(system.columns)
    if not system.matrix:
        null = [[mpq(int(i == j)) for i in range(ncols)] for j in range(ncols)]
        return [mpq(0)] * ncols, null, 0
    augmented = [list(row) + [v] for row, v in zip(system.matrix, system.rhs)]
    ech = echelon(augmented, ncols)
    if any(r[ncols] for r in ech.rows[ech.rank:]):
        row = _first_inconsistent(augmented, ncols)
        raise InconsistentSystemError(
            f"inconsistent system: equation {row} (node {system.rows[row][0]}, "
            f"h={system.rows[row][1]}) contradicts the equations before it", row)
    x = [mpq(0)] * ncols
    for row, pc in zip(ech.rows, ech.pivots):
        x[pc] = mpq(row[ncols], ech.denom)
    return x, _null_vectors(ech), ech.rank


def _consistent(rows, ncols) -> bool:
    ech = echelon(rows, ncols)
    return not any(r[ncols] for r in ech.rows[ech.rank:])


def _first_inconsistent(augmented, ncols) -> int:
    """Smallest k such that equations 0..k have no common solution."""
    lo, hi = 0, len(augmented) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _consistent(augmented[:mid + 1], ncols):
            lo = mid + 1
        else:
            hi = mid
    return lo


def _poly(columns, coeffs, nvars) -> Polynomial:
    return Polynomial({beta: c for beta, c in zip(columns, coeffs) if c}, nvars)


def _check_mode(mode: str):
    if mode not in MODES:
        raise ModeError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")


def _solve(nodes, mode, ideal: GroebnerBasis) -> Solution:
    n = nodes[0].nvars
    stairs = staircase_complement(ideal)
    system = assemble_system(stairs, nodes)
    try:
        x, null, rank = solve_exact(system)
    except InconsistentSystemError as exc:
        raise InternalInvariantError(f"{mode} system reported inconsistent, which theory excludes: {exc}") from exc
    return Solution(
        polynomial=_poly(system.columns, x, n),
        ideal=ideal,
        staircase=stairs,
        free_parameters=len(stairs) - rank,
        nullspace=tuple(_poly(system.columns, v, n) for v in null),
        rank=rank,
        nodes=tuple(nodes),
        mode=mode,
        system=system,
    )


def interpolate(nodes: Sequence[NodeSpec], mode: str = "hermite",
                order: MonomialOrder = GREVLEX) -> Solution:
    """Solve a Lagrange, Hermite or Birkhoff problem exactly."""
    _check_mode(mode)
    nodes = list(nodes)
    check_nodes(nodes)
    return _solve(nodes, mode, problem_ideal(nodes, mode, order))


def add_node(previous: Solution | None, node: NodeSpec, mode: str | None = None,
             order: MonomialOrder | None = None) -> Solution:
    """Extend a solved problem by one node, reusing its ideal.

    Equivalent to :func:`interpolate` on ``previous.nodes + [node]``.
    """
    if previous is None:
        return interpolate([node], mode or "hermite", order or GREVLEX)
    if mode is not None and mode != previous.mode:
        raise ModeError(f"previous solution is {previous.mode}, not {mode}")
    if order is not None and order != previous.order:
        raise ValueError(f"previous solution uses {previous.order}, not {order}")
    nodes = list(previous.nodes) + [node]
    check_nodes(nodes)
    new = node_ideal(node, previous.mode, previous.order, len(previous.nodes)).basis
    return _solve(nodes, previous.mode, intersect(previous.ideal, new))


@dataclass(frozen=True)
class Residual:
    node: int
    h: tuple
    expected: Scalar
    actual: Scalar

    @property
    def value(self) -> Scalar:
        return self.actual - self.expected


@dataclass(frozen=True)
class VerificationReport:
    residuals: tuple

    @property
    def passed(self) -> bool:
        return all(r.value == 0 for r in self.residuals)

    def failures(self) -> list[Residual]:
        return [r for r in self.residuals if r.value != 0]

    def lines(self) -> list[str]:
        out = [f"node {r.node} h={list(r.h)} residual {format_scalar(r.value)}" for r in self.residuals]
        out.append(f"{'PASS' if self.passed else 'FAIL'}: {len(self.failures())} nonzero residual(s) "
                   f"out of {len(self.residuals)}")
        return out


def verify(polynomial, nodes: Sequence[NodeSpec]) -> VerificationReport:
    """Residual ``D^(h) F(p_i) - v_{i,h}`` of every condition, computed directly."""
    f = polynomial.polynomial if isinstance(polynomial, Solution) else polynomial
    residuals = []
    for i, node in enumerate(nodes):
        for h, value in node.conditions.items():
            actual = iterated_derivative(f, node.directions, h).evaluate(node.point)
            residuals.append(Residual(i, h, value, actual))
    return VerificationReport(tuple(residuals))
