"""Problem and solution files (JSON, numbers as exact strings)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .algebra import MonomialOrder, Polynomial, format_scalar, parse_polynomial, scalar
from .derivations import DirectionSet, NodeSpec
from .errors import InterpolationError, ProblemFileError
from .ideals import MODES
from .solver import Solution


@dataclass(frozen=True)
class Problem:
    variables: tuple
    order: MonomialOrder
    mode: str
    nodes: tuple

    @property
    def nvars(self) -> int:
        return len(self.variables)


def _fail(where: str, message: str):
    raise ProblemFileError(f"{where}: {message}")


def _number(value: Any, where: str):
    if isinstance(value, bool) or isinstance(value, float):
        _fail(where, f"expected an exact number written as a string, got {json.dumps(value)}")
    if isinstance(value, (int, str)):
        try:
            return scalar(value)
        except ValueError as exc:
            _fail(where, str(exc))
    _fail(where, f"expected a number string, got {type(value).__name__}")


def _vector(value: Any, n: int, where: str) -> tuple:
    if not isinstance(value, list):
        _fail(where, "expected a list")
    if len(value) != n:
        _fail(where, f"expected {n} coordinates, got {len(value)}")
    return tuple(_number(x, f"{where}[{k}]") for k, x in enumerate(value))


def _read_json(source) -> tuple[Any, str]:
    if isinstance(source, (str, Path)) and not str(source).lstrip().startswith("{"):
        path = Path(source)
        try:
            text = path.read_text()
        except OSError as exc:
            raise ProblemFileError(f"{path}: {exc.strerror or exc}") from exc
        name = str(path)
    else:
        text, name = str(source), "<string>"
    try:
        return json.loads(text), name
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"{name}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def parse_problem(source, order: str | None = None, mode: str | None = None) -> Problem:
    """Read a problem file (path or JSON text); ``order``/``mode`` override the file."""
    data, name = _read_json(source)
    if not isinstance(data, dict):
        _fail(name, "top level must be an object")
    variables = data.get("variables")
    if not isinstance(variables, list) or not variables or not all(isinstance(v, str) for v in variables):
        _fail(f"{name}: variables", "expected a nonempty list of names")
    if len(set(variables)) != len(variables):
        _fail(f"{name}: variables", "names must be distinct")
    n = len(variables)

    order_name = order or data.get("order", "grevlex")
    try:
        order_obj = MonomialOrder.parse(order_name)
    except (ValueError, AttributeError) as exc:
        _fail(f"{name}: order", str(exc))
    mode_name = mode or data.get("mode", "hermite")
    if mode_name not in MODES:
        _fail(f"{name}: mode", f"unknown mode {mode_name!r}; expected one of {', '.join(MODES)}")

    raw_nodes = data.get("nodes")
    if not isinstance(raw_nodes, list) or not raw_nodes:
        _fail(f"{name}: nodes", "expected a nonempty list")
    nodes = []
    for i, raw in enumerate(raw_nodes):
        where = f"{name}: nodes[{i}]"
        if not isinstance(raw, dict):
            _fail(where, "expected an object")
        point = _vector(raw.get("point"), n, f"{where}.point")
        raw_dirs = raw.get("directions", [])
        if not isinstance(raw_dirs, list):
            _fail(f"{where}.directions", "expected a list of vectors")
        dirs = tuple(_vector(u, n, f"{where}.directions[{k}]") for k, u in enumerate(raw_dirs))
        raw_conds = raw.get("conditions")
        if not isinstance(raw_conds, list) or not raw_conds:
            _fail(f"{where}.conditions", "expected a nonempty list")
        conds = {}
        for k, c in enumerate(raw_conds):
            cw = f"{where}.conditions[{k}]"
            if not isinstance(c, dict):
                _fail(cw, "expected an object with h and value")
            h = c.get("h", [])
            if not isinstance(h, list) or not all(isinstance(a, int) and not isinstance(a, bool) and a >= 0 for a in h):
                _fail(f"{cw}.h", "expected a list of natural numbers")
            if len(h) != len(dirs):
                _fail(f"{cw}.h", f"length {len(h)} does not match {len(dirs)} directions")
            if tuple(h) in conds:
                _fail(f"{cw}.h", f"duplicate multi-index {h}")
            conds[tuple(h)] = _number(c.get("value"), f"{cw}.value")
        try:
            nodes.append(NodeSpec(point, DirectionSet(dirs, n), conds))
        except InterpolationError as exc:
            _fail(where, str(exc))
    return Problem(tuple(variables), order_obj, mode_name, tuple(nodes))


def problem_to_dict(problem: Problem) -> dict:
    return {
        "variables": list(problem.variables),
        "order": str(problem.order),
        "mode": problem.mode,
        "nodes": [
            {
                "point": [format_scalar(x) for x in node.point],
                "directions": [[format_scalar(x) for x in u] for u in node.directions],
                "conditions": [{"h": list(h), "value": format_scalar(v)} for h, v in node.conditions.items()],
            }
            for node in problem.nodes
        ],
    }


def solution_to_dict(solution: Solution, variables) -> dict:
    order = solution.order
    return {
        "variables": list(variables),
        "order": str(order),
        "mode": solution.mode,
        "polynomial_text": solution.polynomial.to_text(variables, order),
        "coefficients": [
            {"exponent": list(alpha), "value": format_scalar(c)}
            for alpha, c in solution.polynomial.sorted_terms(order)
        ],
        "staircase": [list(beta) for beta in solution.staircase],
        "free_parameters": solution.free_parameters,
        "rank": solution.rank,
        "groebner_basis": solution.ideal.to_text(variables),
        "nullspace": [g.to_text(variables, order) for g in solution.nullspace],
    }


def dump_json(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


@dataclass(frozen=True)
class SolutionFile:
    variables: tuple
    order: MonomialOrder
    mode: str
    polynomial: Polynomial
    staircase: tuple
    free_parameters: int
    groebner_basis: tuple


def load_solution(source) -> SolutionFile:
    data, name = _read_json(source)
    if not isinstance(data, dict):
        _fail(name, "top level must be an object")
    variables = data.get("variables")
    if not isinstance(variables, list) or not variables:
        _fail(f"{name}: variables", "expected a nonempty list of names")
    n = len(variables)
    try:
        order = MonomialOrder.parse(data.get("order", "grevlex"))
    except ValueError as exc:
        _fail(f"{name}: order", str(exc))
    raw = data.get("coefficients")
    if not isinstance(raw, list):
        _fail(f"{name}: coefficients", "expected a list")
    terms = {}
    for k, entry in enumerate(raw):
        where = f"{name}: coefficients[{k}]"
        if not isinstance(entry, dict):
            _fail(where, "expected an object with exponent and value")
        e = entry.get("exponent")
        if not isinstance(e, list) or len(e) != n or not all(isinstance(a, int) and a >= 0 for a in e):
            _fail(f"{where}.exponent", f"expected {n} natural numbers")
        if tuple(e) in terms:
            _fail(f"{where}.exponent", f"duplicate exponent {e}")
        terms[tuple(e)] = _number(entry.get("value"), f"{where}.value")
    basis = []
    for k, text in enumerate(data.get("groebner_basis", [])):
        try:
            basis.append(parse_polynomial(text, variables))
        except (ValueError, TypeError) as exc:
            _fail(f"{name}: groebner_basis[{k}]", str(exc))
    return SolutionFile(
        variables=tuple(variables),
        order=order,
        mode=data.get("mode", ""),
        polynomial=Polynomial(terms, n),
        staircase=tuple(tuple(b) for b in data.get("staircase", [])),
        free_parameters=int(data.get("free_parameters", 0)),
        groebner_basis=tuple(basis),
    )
