from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import P, exponents, points, polynomials, small_rationals
from gbinterp import (
    GREVLEX, GRLEX, LEX, DimensionError, MonomialOrder, Polynomial, ZeroPolynomialError,
    cmp_monomials, evaluate, leading_exponent, poly_add, poly_mul, scalar, translate,
)
from gbinterp.algebra import format_scalar, monomials_of_degree

ORDERS = [LEX, GRLEX, GREVLEX, MonomialOrder.block(1, LEX, GREVLEX), MonomialOrder.block(2, GRLEX, LEX)]


class TestScalar:
    def test_decimal_strings_are_exact(self):
        assert scalar("0.5") == Fraction(1, 2)
        assert scalar("0.000015") == Fraction(15, 1000000)
        assert scalar("-1.5e-5") == Fraction(-3, 200000)
        assert scalar("1/3") == Fraction(1, 3)

    def test_canonical_form(self):
        q = scalar(Fraction(6, -4))
        assert (q.numerator, q.denominator) == (-3, 2)
        assert format_scalar(scalar("0.1")) == "1/10"
        assert format_scalar(0) == "0"

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            scalar(0.1)

    def test_garbage_rejected(self):
        with pytest.raises(ValueError):
            scalar("abc")

    @given(small_rationals, small_rationals, small_rationals)
    def test_field_axioms(self, a, b, c):
        a, b, c = scalar(a), scalar(b), scalar(c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        if a != 0:
            assert a * (1 / a) == 1


class TestOrders:
    def test_lex_first_coordinate(self):
        assert cmp_monomials((1, 0), (0, 2), LEX) == 1

    def test_grevlex_degree_first(self):
        assert cmp_monomials((1, 0), (0, 2), GREVLEX) == -1

    @pytest.mark.parametrize("order", ORDERS, ids=str)
    def test_one_is_minimal(self, order):
        assert cmp_monomials((0, 0, 0), (0, 0, 1), order) == -1
        assert cmp_monomials((0, 0, 0), (0, 0, 0), order) == 0

    def test_grevlex_vs_grlex(self):
        # x*z^2 vs y^3 style tie-break: degree 3 monomials in three variables
        assert cmp_monomials((1, 0, 2), (0, 3, 0), GRLEX) == 1
        assert cmp_monomials((1, 0, 2), (0, 3, 0), GREVLEX) == -1

    def test_block_eliminates_first_block(self):
        order = MonomialOrder.block(1, LEX, GREVLEX)
        assert cmp_monomials((1, 0, 0), (0, 5, 5), order) == 1

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            cmp_monomials((1, 0), (1, 0, 0), LEX)

    def test_unknown_order_name(self):
        with pytest.raises(ValueError):
            MonomialOrder.parse("revlex")

    @pytest.mark.parametrize("order", ORDERS, ids=str)
    @given(a=exponents(3), b=exponents(3), c=exponents(3))
    def test_total_antisymmetric_multiplicative(self, order, a, b, c):
        ab = cmp_monomials(a, b, order)
        assert ab == -cmp_monomials(b, a, order)
        assert (ab == 0) == (a == b)
        shifted = cmp_monomials(tuple(x + z for x, z in zip(a, c)), tuple(y + z for y, z in zip(b, c)), order)
        assert shifted == ab
        if ab <= 0 and cmp_monomials(b, c, order) <= 0:
            assert cmp_monomials(a, c, order) <= 0


class TestArithmetic:
    def test_add(self):
        assert P("X + Y") + P("X - Y") == P("2*X")
        f = P("3*X*Y - 1/2")
        assert poly_add(f, Polynomial.zero(2)) == f
        assert (P("X^2") + P("-X^2")).is_zero()
        assert len((P("X^2") + P("-X^2")).terms) == 0

    def test_mul(self):
        assert poly_mul(P("X + 1"), P("X - 1")) == P("X^2 - 1")
        f = P("2/3*X*Y^2 + Y")
        assert f * Polynomial.constant(1, 2) == f
        assert P("X + Y") ** 2 == P("X^2 + 2*X*Y + Y^2")

    def test_mixed_arity_is_an_error(self):
        with pytest.raises(DimensionError):
            poly_add(P("X", "X"), P("X"))
        with pytest.raises(DimensionError):
            poly_mul(P("X", "X"), P("X"))

    def test_evaluate(self):
        assert evaluate(P("X^2*Y"), (2, 3)) == 12
        f = P("5*X^3 - 2*X*Y + 7/3")
        assert evaluate(f, (0, 0)) == Fraction(7, 3)
        assert evaluate(P("X - 4/5"), ("4/5", 9)) == 0
        with pytest.raises(DimensionError):
            evaluate(f, (1,))

    def test_translate(self):
        assert translate(P("X^2", "X"), (1,)) == P("X^2 + 2*X + 1", "X")
        f = P("X^3*Y - 2*Y^2 + 1")
        assert translate(f, (0, 0)) == f
        assert translate(translate(f, (1, -2)), (-1, 2)) == f
        assert translate(f, (3, 1)).total_degree() == f.total_degree()

    def test_leading_exponent(self):
        f = P("X + Y^2")
        assert leading_exponent(f, LEX) == (1, 0)
        assert leading_exponent(f, GREVLEX) == (0, 2)
        assert leading_exponent(Polynomial.constant(5, 3), LEX) == (0, 0, 0)
        with pytest.raises(ZeroPolynomialError):
            leading_exponent(Polynomial.zero(2), LEX)

    def test_text_rendering(self):
        f = Polynomial({(2, 1): Fraction(3, 2), (0, 0): -1}, 2)
        assert f.to_text(["X", "Y"]) == "3/2*X^2*Y - 1"
        assert P("-X + Y").to_text(["X", "Y"], LEX) == "-X + Y"
        assert Polynomial.zero(2).to_text(["X", "Y"]) == "0"

    def test_monomials_of_degree(self):
        assert monomials_of_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]
        assert len(monomials_of_degree(3, 3)) == 10


class TestMorphisms:
    @given(polynomials(2), polynomials(2), points(2))
    def test_evaluate_is_ring_morphism(self, f, g, p):
        assert evaluate(f * g, p) == evaluate(f, p) * evaluate(g, p)
        assert evaluate(f + g, p) == evaluate(f, p) + evaluate(g, p)

    @given(polynomials(3, max_exp=2), polynomials(3, max_exp=2), points(3), points(3))
    @settings(max_examples=50)
    def test_translate_is_ring_morphism(self, f, g, p, q):
        assert translate(f * g, p) == translate(f, p) * translate(g, p)
        assert translate(f + g, p) == translate(f, p) + translate(g, p)
        shifted = tuple(a + b for a, b in zip(q, p))
        assert evaluate(translate(f, p), q) == evaluate(f, shifted)

    @given(polynomials(2))
    def test_text_round_trip(self, f):
        from gbinterp import parse_polynomial

        assert parse_polynomial(f.to_text(["X", "Y"]), ["X", "Y"]) == f
