"""Exact linear algebra over the rationals.

Rows are cleared of denominators and brought to reduced row echelon form
fraction-free: every pivot ends equal to one common integer ``denom`` and
the rational RREF is ``rows / denom``.  When python-flint is installed its
multimodular ``fmpz_mat.rref`` does the work; otherwise a Bareiss-style
Gauss-Jordan in gmpy2 integers is used.  The RREF is unique, so both
backends return identical results.  Set ``GBINTERP_LINALG=python`` to
force the pure backend.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from gmpy2 import divexact, lcm, mpq, mpz

from .algebra import scalar

try:
    import flint
except ImportError:  # optional speedup
    flint = None


def backend() -> str:
    if flint is None or os.environ.get("GBINTERP_LINALG", "").lower() == "python":
        return "python"
    return "flint"


@dataclass
class Echelon:
    """Reduced form of ``[A | B]`` with every pivot equal to ``denom``.

    ``rows[i]`` is the integer row whose pivot sits in ``pivots[i]``.  Rows
    past ``len(pivots)`` are zero on the coefficient block ``A``.
    """

    rows: list
    pivots: list
    denom: mpz
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _integer_row(row: Sequence) -> list:
    vals = [scalar(x) for x in row]
    d = mpz(1)
    for v in vals:
        if v.denominator != 1:
            d = lcm(d, v.denominator)
    return [v.numerator * divexact(d, v.denominator) for v in vals]


def echelon(matrix: Sequence[Sequence], ncols: int | None = None) -> Echelon:
    """Fraction-free reduced echelon form on the first ``ncols`` columns.

    Extra columns (right-hand sides) are carried along.
    """
    rows = [_integer_row(r) for r in matrix]
    width = len(rows[0]) if rows else (ncols or 0)
    if ncols is None:
        ncols = width
    if rows and width and backend() == "flint":
        return _echelon_flint(rows, ncols)
    return _echelon_python(rows, ncols)


def _echelon_flint(rows: list, ncols: int) -> Echelon:
    reduced, den, rk = flint.fmpz_mat([[int(x) for x in r] for r in rows]).rref()
    sign = -1 if den < 0 else 1
    out = [[mpz(int(x)) * sign for x in r] for r in reduced.table()]
    pivots = []
    for r in out[:rk]:
        c = next(j for j, x in enumerate(r) if x)
        if c >= ncols:
            break
        pivots.append(c)
    return Echelon(out, pivots, mpz(int(den)) * sign if rk else mpz(1), ncols)


def _echelon_python(rows: list, ncols: int) -> Echelon:
    """Gauss-Jordan in the Bareiss form; the first nonzero entry is the pivot."""
    pivots = []
    prev = mpz(1)
    r = 0
    m = len(rows)
    for c in range(ncols):
        if r == m:
            break
        i = next((k for k in range(r, m) if rows[k][c]), None)
        if i is None:
            continue
        if i != r:
            rows[i], rows[r] = rows[r], rows[i]
        prow = rows[r]
        piv = prow[c]
        for k in range(m):
            if k == r:
                continue
            row = rows[k]
            a = row[c]
            if a:
                rows[k] = [divexact(piv * x - a * y, prev) for x, y in zip(row, prow)]
            elif piv != prev:
                rows[k] = [divexact(piv * x, prev) for x in row]
        prev = piv
        pivots.append(c)
        r += 1
    return Echelon(rows, pivots, prev, ncols)


def rank(matrix: Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    return echelon(matrix).rank


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    """Basis of ``{x : A x = 0}``, one vector per free column, ascending."""
    if not matrix:
        if ncols is None:
            raise ValueError("ncols is required for an empty matrix")
        return [[mpq(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    ech = echelon(matrix)
    return _null_vectors(ech)


def _null_vectors(ech: Echelon) -> list[list]:
    pivset = set(ech.pivots)
    d = ech.denom
    basis = []
    for f in range(ech.ncols):
        if f in pivset:
            continue
        x = [mpq(0)] * ech.ncols
        x[f] = mpq(1)
        for row, pc in zip(ech.rows, ech.pivots):
            if row[f]:
                x[pc] = mpq(-row[f], d)
        basis.append(x)
    return basis
