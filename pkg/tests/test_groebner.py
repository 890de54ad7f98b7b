import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P, polynomials, small_rationals
from gbinterp import (
    GREVLEX, GRLEX, LEX, DimensionError, MonomialOrder, NonCofiniteError, Polynomial,
    buchberger, intersect, normal_form, staircase_complement,
)
from gbinterp.groebner import GroebnerBasis, ideal_contains, is_cofinite, s_polynomial, same_ideal
from gbinterp.ideals import point_ideal
from gbinterp.linalg import rank


def gb(texts, order=GREVLEX, names="XY"):
    return buchberger([P(t, names) for t in texts], order)


def points_ideal(pts, order=GREVLEX):
    ideal = point_ideal(pts[0], order)
    for p in pts[1:]:
        ideal = intersect(ideal, point_ideal(p, order))
    return ideal


class TestNormalForm:
    def test_simple_division(self):
        basis = gb(["X^2 - Y"], LEX)
        assert normal_form(P("X^3"), basis) == P("X*Y")

    def test_point_ideal_gives_value(self):
        basis = point_ideal((2, -1))
        f = P("X^2*Y + 3*Y - 1")
        assert normal_form(f, basis) == Polynomial.constant(-8, 2)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            normal_form(P("X", "X"), gb(["X", "Y"]))

    def test_result_has_no_divisible_terms(self):
        basis = gb(["X^2 + Y^2 - 1", "X*Y - 1/2"])
        r = normal_form(P("X^4*Y^3 - 7*X*Y^5 + 2"), basis)
        leads = basis.leading_exponents()
        for alpha in r.terms:
            assert not any(all(a >= b for a, b in zip(alpha, lead)) for lead in leads)


class TestBuchberger:
    def test_redundant_generator_dropped(self):
        basis = gb(["X^2 - X", "Y", "X*Y"], LEX)
        assert set(basis.generators) == {P("Y"), P("X^2 - X")}

    def test_reduced_and_monic(self):
        basis = gb(["X^2 + Y", "X^2"], GREVLEX)
        assert set(basis.generators) == {P("X^2"), P("Y")}
        basis = gb(["2*X + 4*Y", "3*Y - 6"], LEX)
        assert set(basis.generators) == {P("X + 4"), P("Y - 2")}

    def test_unit_ideal(self):
        basis = gb(["X + 1", "X"])
        assert basis.generators == (Polynomial.constant(1, 2),)
        assert basis.is_unit()

    def test_zero_ideal(self):
        basis = buchberger([Polynomial.zero(2)], GREVLEX)
        assert basis.generators == ()
        assert not is_cofinite(basis)

    def test_circle_and_line(self):
        basis = gb(["X^2 + Y^2 - 1", "X - Y"], LEX)
        assert set(basis.generators) == {P("X - Y"), P("Y^2 - 1/2")}

    def test_deterministic(self):
        gens = ["X^3 - 2*X*Y", "X^2*Y - 2*Y^2 + X"]
        assert gb(gens).generators == gb(gens).generators
        assert gb(gens).generators == gb(list(reversed(gens))).generators

    def test_s_polynomial(self):
        s = s_polynomial(P("X^2 - Y"), P("X*Y - 1"), LEX)
        assert s == P("-Y^2 + X")

    @given(st.lists(polynomials(2, max_exp=2, max_terms=3), min_size=1, max_size=3))
    @settings(max_examples=40, deadline=None)
    def test_s_polynomials_reduce_to_zero(self, gens):
        basis = buchberger(gens, GREVLEX, nvars=2)
        for f, g in itertools.combinations(basis.generators, 2):
            assert normal_form(s_polynomial(f, g, GREVLEX), basis).is_zero()
        for g in gens:
            assert ideal_contains(basis, g)

    @given(st.lists(polynomials(2, max_exp=2, max_terms=3), min_size=1, max_size=3),
           polynomials(2), polynomials(2, max_exp=2))
    @settings(max_examples=40, deadline=None)
    def test_normal_form_is_canonical(self, gens, f, g):
        basis = buchberger(gens, GRLEX, nvars=2)
        member = sum((g * h for h in basis.generators), Polynomial.zero(2))
        assert normal_form(f + member, basis) == normal_form(f, basis)
        assert normal_form(normal_form(f, basis), basis) == normal_form(f, basis)

    @given(st.permutations(["X^2 - Y*Z", "Y^2 - X*Z + 1", "X*Y*Z - 2"]))
    @settings(max_examples=6, deadline=None)
    def test_independent_of_input_order(self, texts):
        names = "XYZ"
        reference = gb(["X^2 - Y*Z", "Y^2 - X*Z + 1", "X*Y*Z - 2"], GREVLEX, names)
        assert gb(texts, GREVLEX, names).generators == reference.generators


class TestIntersect:
    def test_coordinate_axes(self):
        result = intersect(gb(["X"]), gb(["Y"]))
        assert result.generators == (P("X*Y"),)

    def test_two_points(self):
        result = intersect(gb(["X", "Y"]), gb(["X - 1", "Y"]))
        assert set(result.generators) == {P("Y"), P("X^2 - X")}

    def test_idempotent(self):
        a = gb(["X^2 - Y", "Y^2"])
        assert same_ideal(intersect(a, a), a)

    def test_unit_and_zero(self):
        a = gb(["X - 1", "Y + 2"])
        unit = gb(["1"])
        assert intersect(a, unit) == a
        assert intersect(unit, a).generators == a.generators
        assert intersect(a, buchberger([], GREVLEX, nvars=2)).generators == ()

    def test_keeps_first_order(self):
        a = gb(["X", "Y"], LEX)
        b = gb(["X - 1", "Y - 1"], LEX)
        assert intersect(a, b).order == LEX

    @given(st.lists(st.tuples(small_rationals, small_rationals), min_size=1, max_size=3),
           st.lists(st.tuples(small_rationals, small_rationals), min_size=1, max_size=3),
           polynomials(2, max_exp=2))
    @settings(max_examples=30, deadline=None)
    def test_membership_equivalence(self, pa, pb, f):
        a, b = points_ideal(pa), points_ideal(pb)
        both = intersect(a, b)
        assert ideal_contains(both, f) == (ideal_contains(a, f) and ideal_contains(b, f))
        for g in both.generators:
            assert ideal_contains(a, g) and ideal_contains(b, g)

    @pytest.mark.parametrize("order", [GREVLEX, LEX])
    def test_comaximal_fat_points_stay_small(self, order):
        # <T*a, (1-T)*b> contains T - e for an idempotent e when a + b = 1;
        # a careless input phase lets e's coefficients explode
        def fat(p, k):
            shifted = [Polynomial.variable(i, 3) - c for i, c in enumerate(p)]
            return buchberger([shifted[0] ** e[0] * shifted[1] ** e[1] * shifted[2] ** e[2]
                               for e in itertools.product(range(k + 1), repeat=3) if sum(e) == k],
                              order, 3)
        ideals = [fat((-3, -3, 3), 2), fat((-2, 0, 2), 4), fat((1, -3, -1), 1), fat((1, -3, 1), 4)]
        acc = ideals[0]
        for J in ideals[1:]:
            acc = intersect(acc, J)
        assert len(staircase_complement(acc)) == 4 + 20 + 1 + 20
        for J in ideals:
            assert all(ideal_contains(J, g) for g in acc.generators)
        bits = max(c.numerator.bit_length() + c.denominator.bit_length()
                   for g in acc.generators for c in g.terms.values())
        assert bits < 200


class TestStaircase:
    def test_from_leading_exponents(self):
        basis = GroebnerBasis((P("X^2"), P("X*Y"), P("Y^3")), GREVLEX, 2)
        stairs = staircase_complement(basis)
        assert set(stairs) == {(0, 0), (1, 0), (0, 1), (0, 2)}
        assert stairs.exponents[0] == (0, 0)

    def test_point_ideal(self):
        assert tuple(staircase_complement(point_ideal((3, "1/2", -1)))) == ((0, 0, 0),)

    @pytest.mark.parametrize("n,b,expected", [(2, 1, 3), (2, 2, 6), (3, 2, 10), (4, 1, 5)])
    def test_monomials_of_fixed_degree(self, n, b, expected):
        gens = []
        for e in itertools.product(range(b + 2), repeat=n):
            if sum(e) == b + 1:
                gens.append(Polynomial({e: 1}, n))
        stairs = staircase_complement(buchberger(gens, GREVLEX))
        assert len(stairs) == expected
        assert all(sum(e) <= b for e in stairs)

    def test_non_cofinite(self):
        with pytest.raises(NonCofiniteError):
            staircase_complement(gb(["X*Y", "X^2"]))
        with pytest.raises(NonCofiniteError):
            staircase_complement(buchberger([], GREVLEX, nvars=2))

    def test_unit_ideal_has_empty_staircase(self):
        assert len(staircase_complement(gb(["1"]))) == 0

    def test_ascending_order(self):
        basis = gb(["X^3", "Y^2"], LEX)
        stairs = staircase_complement(basis)
        assert list(stairs) == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]

    @pytest.mark.parametrize("seed", range(8))
    @pytest.mark.parametrize("order", [LEX, GREVLEX, MonomialOrder.block(1, GREVLEX, LEX)], ids=str)
    def test_size_matches_evaluation_rank(self, seed, order):
        # standard monomials of the ideal of N distinct points form a basis of
        # the functions on those points, so their evaluation matrix is square
        # and invertible
        rng = random.Random(seed)
        pts = list({(rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-2, 2))
                    for _ in range(rng.randint(1, 7))})
        stairs = staircase_complement(points_ideal(pts, order))
        assert len(stairs) == len(pts)
        matrix = [[Polynomial({e: 1}, 3).evaluate(p) for e in stairs] for p in pts]
        assert rank(matrix) == len(pts)
        assert stairs.exponents[0] == (0, 0, 0)

    def test_size_independent_of_order(self):
        pts = [(0, 0), (1, 0), (0, 1), (2, 3), (-1, 5)]
        lex = staircase_complement(points_ideal(pts, LEX))
        grev = staircase_complement(points_ideal(pts, GREVLEX))
        assert len(lex) == len(grev) == 5
        # four distinct Y values, two points share Y = 0
        assert set(lex) == {(0, 0), (0, 1), (0, 2), (0, 3), (1, 0)}
        assert set(grev) != set(lex)
