from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath.ctx_mp import MPContext

from mixedberndt.exact_arith import SQRT2, Sqrt2Number
from mixedberndt.jacobi_maclaurin import q_poly
from mixedberndt.poly_ring import (
    ONE_MINUS_X,
    Poly,
    SqrtFactorExpr,
    derivative_of_poly_times_sqrt,
    divide_by_one_minus_x,
    poly_arith,
)

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(small, max_size=6).map(Poly)


def test_trailing_zeros_trimmed():
    assert Poly((1, 2, 0, 0)) == Poly((1, 2))
    assert Poly((0, 0)).is_zero() and Poly().degree == -1


def test_derivative():
    assert poly_arith(Poly((1, 14, 1)), op="derivative") == Poly((14, 2))


def test_compose_one_minus_x():
    assert poly_arith(Poly.x(), op="compose_one_minus_x") == Poly((1, -1))


def test_eval():
    assert poly_arith(Poly((1, 14, 1)), 1, op="eval") == 16


def test_sqrt2_coefficients():
    p = Poly((SQRT2, 1))
    assert (p * p)(0) == 2
    assert p(SQRT2) == Sqrt2Number(0, 2)


def test_palindrome_and_reverse():
    assert Poly((1, 14, 1)).is_palindromic()
    assert Poly((1, 2)).reversed() == Poly((2, 1))


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


@given(polys, polys, small)
def test_derivative_linear_and_product_rule(a, b, k):
    assert (a + b * k).derivative() == a.derivative() + b.derivative() * k
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(polys)
def test_compose_is_involution(a):
    assert a.compose_one_minus_x().compose_one_minus_x() == a


@given(polys)
def test_divide_by_one_minus_x_roundtrip(a):
    assert divide_by_one_minus_x(a * ONE_MINUS_X) == a


def test_divide_by_one_minus_x_rejects_remainder():
    with pytest.raises(ValueError):
        divide_by_one_minus_x(Poly((1, 1)))


class TestSqrtDerivative:
    def test_constant(self):
        d = derivative_of_poly_times_sqrt(SqrtFactorExpr(Poly((1,)), 1))
        assert d == SqrtFactorExpr(Poly((Fraction(-1, 2),)), -1)

    def test_three_halves_power(self):
        d = derivative_of_poly_times_sqrt(SqrtFactorExpr(Poly((1, -1)), 1))
        assert d == SqrtFactorExpr(Poly((Fraction(-3, 2), Fraction(3, 2))), -1)

    def test_q3(self):
        d = derivative_of_poly_times_sqrt(SqrtFactorExpr(q_poly(1).compose_one_minus_x(), 1))
        assert d == SqrtFactorExpr(Poly((-2, Fraction(3, 2))), -1)

    def test_rejects_other_powers(self):
        with pytest.raises(ValueError):
            derivative_of_poly_times_sqrt(SqrtFactorExpr(Poly((1,)), 0))

    def test_normalization_absorbs_factor(self):
        e = SqrtFactorExpr(Poly((1, -1)), -1).normalized()
        assert e.sqrt_power == 1 and e.poly_part == Poly((1,))

    @pytest.mark.parametrize("n", range(5))
    def test_against_central_difference(self, n):
        mp = MPContext()
        mp.dps = 60
        shifted = q_poly(n).compose_one_minus_x()
        exact = derivative_of_poly_times_sqrt(SqrtFactorExpr(shifted, 1))

        def real(c):
            c = Fraction(c)
            return mp.mpf(c.numerator) / c.denominator

        def f(x):
            return shifted.map_coeffs(real)(x) * mp.sqrt(1 - x)

        x0 = mp.mpf(1) / 3
        h = mp.mpf(10) ** -20
        numeric = (f(x0 + h) - f(x0 - h)) / (2 * h)
        value = exact.poly_part.map_coeffs(real)(x0) / mp.sqrt(1 - x0)
        assert abs(numeric - value) < mp.mpf(10) ** -15
