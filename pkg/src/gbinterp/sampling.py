"""Evaluate an exact polynomial on a grid and compare with reference samples.

Grid specs are comma separated, one entry per variable:

* ``v``               a fixed value;
* ``lo:hi:n``         ``n`` evenly spaced values from ``lo`` to ``hi`` inclusive;
* ``lo:hi:n:open``    the same spacing with ``hi`` excluded, ``lo + k (hi - lo) / n``.

Bounds are exact decimals, so grid points are exact rationals; the
polynomial is evaluated exactly and only the printed value is rounded.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from typing import Sequence

from gmpy2 import mpq

from .algebra import Polynomial, scalar
from .errors import DimensionError, ProblemFileError

ALIGN_TOL = 1e-9


def parse_grid(spec: str, nvars: int) -> list[list]:
    entries = [e.strip() for e in spec.split(",")]
    if len(entries) != nvars:
        raise DimensionError(f"grid has {len(entries)} entries for {nvars} variables")
    axes = []
    for k, entry in enumerate(entries):
        parts = entry.split(":")
        try:
            if len(parts) == 1:
                axes.append([scalar(parts[0])])
                continue
            if len(parts) not in (3, 4) or (len(parts) == 4 and parts[3] != "open"):
                raise ValueError("expected v, lo:hi:n or lo:hi:n:open")
            lo, hi, count = scalar(parts[0]), scalar(parts[1]), int(parts[2])
        except ValueError as exc:
            raise ProblemFileError(f"grid entry {k} ({entry!r}): {exc}") from exc
        if count < 1:
            raise ProblemFileError(f"grid entry {k}: need at least one point")
        if len(parts) == 4:
            axes.append([lo + (hi - lo) * mpq(i, count) for i in range(count)])
        elif count == 1:
            axes.append([lo])
        else:
            axes.append([lo + (hi - lo) * mpq(i, count - 1) for i in range(count)])
    return axes


def grid_points(axes: Sequence[Sequence]) -> list[tuple]:
    """Cartesian product, last variable varying fastest."""
    return list(itertools.product(*axes))


def read_reference(path, names: Sequence[str]) -> tuple[list[tuple], list[float]]:
    """Reference CSV: one column per variable plus a ``reference`` column."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        fields = reader.fieldnames or []
        missing = [c for c in list(names) + ["reference"] if c not in fields]
        if missing:
            raise ProblemFileError(f"{path}: missing column(s) {', '.join(missing)}")
        coords, values = [], []
        for lineno, row in enumerate(reader, start=2):
            try:
                coords.append(tuple(float(row[c]) for c in names))
                values.append(float(row["reference"]))
            except (TypeError, ValueError) as exc:
                raise ProblemFileError(f"{path}: line {lineno}: {exc}") from exc
    return coords, values


@dataclass
class SampleResult:
    names: tuple
    points: list
    values: list
    reference: list | None = None

    @property
    def differences(self) -> list | None:
        if self.reference is None:
            return None
        return [r - v for r, v in zip(self.reference, self.values)]

    @property
    def max_abs_difference(self) -> float | None:
        diffs = self.differences
        return None if diffs is None else max(abs(d) for d in diffs)

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        header = list(self.names) + ["value"]
        if self.reference is not None:
            header += ["reference", "difference"]
        writer.writerow(header)
        diffs = self.differences
        for k, (p, v) in enumerate(zip(self.points, self.values)):
            row = [repr(float(x)) for x in p] + [repr(v)]
            if diffs is not None:
                row += [repr(self.reference[k]), repr(diffs[k])]
            writer.writerow(row)
        return out.getvalue()


def sample(f: Polynomial, axes: Sequence[Sequence], names: Sequence[str],
           reference: tuple[list, list] | None = None) -> SampleResult:
    points = grid_points(axes)
    values = [float(f.evaluate(p)) for p in points]
    ref_values = None
    if reference is not None:
        coords, ref_values = reference
        if len(coords) != len(points):
            raise ProblemFileError(f"reference has {len(coords)} rows, grid has {len(points)} points")
        for k, (p, q) in enumerate(zip(points, coords)):
            if any(abs(float(x) - y) > ALIGN_TOL * max(1.0, abs(y)) for x, y in zip(p, q)):
                raise ProblemFileError(f"reference row {k + 2} at {q} does not match grid point "
                                       f"{tuple(float(x) for x in p)}")
    return SampleResult(tuple(names), points, values, ref_values)
