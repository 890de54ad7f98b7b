"""Exact multivariate Lagrange, Hermite and Birkhoff interpolation via Groebner bases."""

from .algebra import (
    GREVLEX, GRLEX, LEX, MonomialOrder, Polynomial, cmp_monomials, evaluate,
    leading_exponent, make_point, parse_polynomial, poly_add, poly_mul, scalar, translate,
)
from .derivations import (
    DirectionSet, NodeSpec, directional_derivative, fill_gaps, iterated_derivative,
    lower_set_closure,
)
from .errors import (
    DimensionError, DuplicateNodeError, InconsistentSystemError, InterpolationError,
    InternalInvariantError, InvalidDirectionError, ModeError, NonCofiniteError,
    ProblemFileError, ZeroPolynomialError,
)
from .groebner import (
    GroebnerBasis, Staircase, buchberger, intersect, normal_form, staircase_complement,
)
from .ideals import (
    NodeIdeal, birkhoff_point_ideal, hermite_point_ideal, problem_ideal,
)
from .solver import (
    LinearSystem, Solution, add_node, assemble_system, interpolate, solve_exact, verify,
)

__version__ = "0.1.0"
