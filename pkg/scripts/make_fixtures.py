"""Regenerate tests/fixtures: problem files and reference samples.

Derivative values come from sympy, are evaluated at the (already
rationalized) nodes with 30 significant digits and written rounded to 12
decimal places.  Reference CSVs sample the true functions on the same grids
the acceptance tests pass to ``gbinterp sample``.

    python scripts/make_fixtures.py
"""

from __future__ import annotations

import csv
import itertools
import json
import math
from decimal import ROUND_HALF_EVEN, Decimal
from pathlib import Path

import sympy as sp

from gbinterp.sampling import grid_points, parse_grid

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
DIGITS = 12

ELLIPSOID_GRID = "2:3:50,0:6.283185307179586:50:open"
EX2_SECTION_XZ = "1:3:41,2,1:3:41,2"
EX2_SECTION_XY = "1:3:41,1:3:41,1,3"


def dec(value) -> str:
    """Round to DIGITS decimal places and print without exponent."""
    d = Decimal(str(sp.N(value, 30))) if isinstance(value, sp.Basic) else Decimal(repr(float(value)))
    q = d.quantize(Decimal(1).scaleb(-DIGITS), rounding=ROUND_HALF_EVEN)
    return "0" if q == 0 else format(q.normalize(), "f")


def directional(expr, syms, u):
    return sum(c * sp.diff(expr, x) for c, x in zip(u, syms))


def apply_h(expr, syms, dirs, h):
    for u, k in reversed(list(zip(dirs, h))):
        for _ in range(k):
            expr = directional(expr, syms, u)
    return expr


def problem(variables, mode, nodes):
    return {"variables": variables, "order": "grevlex", "mode": mode, "nodes": nodes}


def node(expr, syms, point, dirs, H):
    subs = dict(zip(syms, [sp.Rational(p) for p in point]))
    conds = []
    for h in H:
        val = apply_h(expr, syms, dirs, h).subs(subs)
        conds.append({"h": list(h), "value": dec(sp.N(val, 30))})
    return {"point": list(point), "directions": [[str(c) for c in u] for u in dirs], "conditions": conds}


def write_json(name, data):
    (OUT / name).write_text(json.dumps(data, indent=2) + "\n")


def write_reference(name, names, spec, fn):
    axes = parse_grid(spec, len(names))
    with open(OUT / name, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(list(names) + ["reference"])
        for p in grid_points(axes):
            q = [float(x) for x in p]
            w.writerow([repr(x) for x in q] + [repr(fn(*q))])


def ellipsoid():
    X, Y = sp.symbols("X Y")
    comps = {
        "x": sp.cos(X) * sp.cos(Y),
        "y": sp.cos(X) * sp.sin(Y),
        "z": 3 * sp.sin(X),
    }
    floats = {
        "x": lambda a, b: math.cos(a) * math.cos(b),
        "y": lambda a, b: math.cos(a) * math.sin(b),
        "z": lambda a, b: 3 * math.sin(a),
    }
    pts = [(2, k * sp.pi / 2) for k in range(4)] + [(3, (2 * k + 1) * sp.pi / 4) for k in range(4)]
    pts = [(dec(a), dec(b)) for a, b in pts]
    e = [(1, 0), (0, 1)]
    variants = {
        "lagrange": ("lagrange", [], [()]),
        "hermite1": ("hermite", e, [(0, 0), (1, 0), (0, 1)]),
        "hermite2": ("hermite", e, [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]),
    }
    for comp, expr in comps.items():
        for tag, (mode, dirs, H) in variants.items():
            nodes = [node(expr, (X, Y), p, dirs, H) for p in pts]
            write_json(f"ellipsoid_{tag}_{comp}.json", problem(["X", "Y"], mode, nodes))
        write_reference(f"ellipsoid_reference_{comp}.csv", ["X", "Y"], ELLIPSOID_GRID, floats[comp])


def four_variable():
    x, y, z, t = syms = sp.symbols("X Y Z T")
    F = (z - t) ** 2 * sp.log(1 / x) / y
    dirs = [(1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0), (1, 1, 1, 1)]
    H = [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
         (2, 0, 0, 0), (0, 2, 0, 0), (1, 1, 0, 0)]
    nodes = [node(F, syms, tuple(str(c) for c in p), dirs, H)
             for p in itertools.product([1, 2, 3], repeat=4)]
    write_json("example2_hermite.json", problem(["X", "Y", "Z", "T"], "hermite", nodes))

    def f(a, b, c, d):
        return (c - d) ** 2 * math.log(1 / a) / b

    write_reference("example2_section_xz.csv", ["X", "Y", "Z", "T"], EX2_SECTION_XZ, f)
    write_reference("example2_section_xy.csv", ["X", "Y", "Z", "T"], EX2_SECTION_XY, f)


def birkhoff_grid():
    x, y, z = syms = sp.symbols("X Y Z")
    G = (z - 2) ** 2 * sp.log(1 / x) / y
    dirs = [(1, 1, 0), (1, 1, 1), (1, 0, 0)]
    H = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 2), (1, 0, 1), (2, 0, 0)]
    for tag, grid in (("example3_birkhoff.json", [1, 2, 3]), ("example3_birkhoff_small.json", [1, 2])):
        nodes = [node(G, syms, tuple(str(c) for c in p), dirs, H) for p in itertools.product(grid, repeat=3)]
        write_json(tag, problem(["X", "Y", "Z"], "birkhoff", nodes))


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    ellipsoid()
    four_variable()
    birkhoff_grid()
    print(f"fixtures written to {OUT}")
