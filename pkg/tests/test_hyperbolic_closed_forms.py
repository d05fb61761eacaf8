from fractions import Fraction

import pytest

from mixedberndt.berndt_integrals import Family, IntegralSpec, closed_form
from mixedberndt.exact_arith import GammaPiExpr
from mixedberndt.hyperbolic_closed_forms import (
    CBAR_0_QUARTER,
    SBAR_1_QUARTER,
    SumKind,
    SumVariant,
    ZExpr,
    cbar_at_quarter,
    cbar_general,
    cbar_quarter_coefficients,
    sbar_at_quarter,
    sbar_general,
    sbar_quarter_coefficients,
    substitute_duplication,
    z_monomials_to_gamma_pi,
)
from mixedberndt.numeric_oracle import DomainError, PrecisionContext, eval_gamma_pi, sum_hyperbolic
from mixedberndt.poly_ring import ONE_MINUS_X, Poly, SqrtFactorExpr

from golden import CBAR_DISPLAYS, INTEGRALS, SBAR_DISPLAYS, gp

X = Poly((0, 1))
X_ONE_MINUS_X = Poly((0, 1, -1))


@pytest.fixture(scope="module")
def ctx50():
    return PrecisionContext(50)


def _tol(ctx, k):
    return ctx.mp.mpf(10) ** -k


class TestGeneralForms:
    @pytest.mark.parametrize("p", sorted(CBAR_DISPLAYS))
    def test_cbar_matches_display(self, p):
        den, a, b = CBAR_DISPLAYS[p]
        expected = ZExpr({
            (2 * p + 1, 1): SqrtFactorExpr(X * a * Fraction(1, den), 1),
            (2 * p + 2, 0): SqrtFactorExpr(X * b * Fraction(1, den), 1),
        })
        assert cbar_general(p) == expected

    @pytest.mark.parametrize("p", sorted(SBAR_DISPLAYS))
    def test_sbar_matches_display(self, p):
        a, b = SBAR_DISPLAYS[p]
        expected = ZExpr({
            (2 * p + 1, 1): SqrtFactorExpr(X_ONE_MINUS_X * a * Fraction(1, 8)),
            (2 * p + 2, 0): SqrtFactorExpr(X_ONE_MINUS_X * b * Fraction(1, 8)),
        })
        assert sbar_general(p) == expected

    def test_sbar_p1_three_terms(self):
        eighth = X_ONE_MINUS_X * Fraction(1, 8)
        expected = ZExpr({
            (2, 2): SqrtFactorExpr(eighth * X_ONE_MINUS_X * 4),
            (3, 1): SqrtFactorExpr(eighth * ONE_MINUS_X * 4),
            (4, 0): SqrtFactorExpr(-eighth),
        })
        assert sbar_general(1) == expected

    def test_rejects_small_p(self):
        with pytest.raises(ValueError):
            cbar_general(0)
        with pytest.raises(ValueError):
            sbar_general(0)

    @pytest.mark.parametrize("x", ["0.3", "0.5", "0.8"])
    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_numeric_at_general_modulus(self, x, p, ctx50):
        # z = 2K/pi, z' = dz/dx, y = pi K'/K, all from mpmath's elliptic integrals
        mp = ctx50.mp
        x = mp.mpf(x)
        K, E, Kp = mp.ellipk(x), mp.ellipe(x), mp.ellipk(1 - x)
        z = 2 * K / mp.pi
        zp = 2 / mp.pi * (E - (1 - x) * K) / (2 * x * (1 - x))
        y = mp.pi * Kp / K

        def real(c):
            c = Fraction(c)
            return mp.mpf(c.numerator) / c.denominator

        for general, variant in ((cbar_general, SumVariant.CBAR), (sbar_general, SumVariant.SBAR)):
            expr = general(p)
            value = 0
            for (a, b), coeff in expr.terms.items():
                c = SqrtFactorExpr(coeff.poly_part.map_coeffs(real), coeff.sqrt_power)
                value += c.evaluate(x, mp.sqrt(1 - x)) * z ** a * zp ** b
            series = sum_hyperbolic(SumKind(variant, 2 * p, 2), y, ctx50)
            assert abs(value - series) < _tol(ctx50, 35)


class TestQuarterValues:
    @pytest.mark.parametrize("p", range(1, 7))
    def test_literal_coefficients_match_substitution(self, p):
        k1, k2 = cbar_quarter_coefficients(p)
        assert substitute_duplication(cbar_general(p)) == {(2 * p + 1, 1): k1, (2 * p + 2, 0): k2}
        assert z_monomials_to_gamma_pi(substitute_duplication(cbar_general(p))) == cbar_at_quarter(p)

    @pytest.mark.parametrize("p", range(2, 7))
    def test_sbar_literal_coefficients_match_substitution(self, p):
        l1, l2 = sbar_quarter_coefficients(p)
        assert substitute_duplication(sbar_general(p)) == {(2 * p + 1, 1): l1, (2 * p + 2, 0): l2}
        assert z_monomials_to_gamma_pi(substitute_duplication(sbar_general(p))) == sbar_at_quarter(p)

    def test_sbar_p1_through_substitution(self):
        # the stored three-term form also lands on the stored value
        assert z_monomials_to_gamma_pi(substitute_duplication(sbar_general(1))) == SBAR_1_QUARTER

    def test_cbar_p1(self):
        assert cbar_at_quarter(1) == gp((Fraction(1, 128), 8, -6), (Fraction(-1, 16), 4, -4))

    def test_cbar_p2_from_published_integral(self):
        # MP(4) = pi^5/8 * Cbar_{4,2}(pi/2)
        assert cbar_at_quarter(2) == INTEGRALS[("mp", 4)].shift(0, -5).scale(8)

    def test_sbar_p2_from_published_integral(self):
        # PM(4) = pi^5/8 * Sbar_{4,2}(pi/2)
        assert sbar_at_quarter(2) == INTEGRALS[("pm", 4)].shift(0, -5).scale(8)

    def test_sbar_p3_membership(self):
        keys = {(g, h) for g, h, _ in sbar_at_quarter(3).monomials()}
        assert keys == {(12, -10), (16, -12)}

    def test_stored_low_order_values(self):
        assert CBAR_0_QUARTER == gp((Fraction(1, 2), 0, 0), (Fraction(-1, 16), 4, -3))
        assert SBAR_1_QUARTER == gp((Fraction(1, 16), 4, -4), (Fraction(1, 2), 0, -2))

    def test_low_order_values_consistent_with_integrals(self):
        # MP(0) = pi/8 - (pi/2) Cbar_{0,2}(pi/2);  MM(2) = (pi^3/4) Sbar_{2,2}(pi/2) - pi/4
        pi8 = GammaPiExpr.monomial(Fraction(1, 8), 0, 1)
        assert closed_form(IntegralSpec(Family.MP, 0)) == pi8 - cbar_at_quarter(0).shift(0, 1).scale(Fraction(1, 2))
        pi4 = GammaPiExpr.monomial(Fraction(1, 4), 0, 1)
        assert closed_form(IntegralSpec(Family.MM, 2)) == sbar_at_quarter(1).shift(0, 3).scale(Fraction(1, 4)) - pi4

    def test_cbar0_with_pi_to_the_fifth_disagrees_with_series(self, ctx50):
        candidate = gp((Fraction(1, 2), 0, 0), (Fraction(-1, 4), 4, -5))
        series = sum_hyperbolic(SumKind(SumVariant.CBAR, 0, 2), ctx50.mp.pi / 2, ctx50)
        assert abs(eval_gamma_pi(candidate, ctx50) - series) > 0.1
        assert abs(eval_gamma_pi(CBAR_0_QUARTER, ctx50) - series) < _tol(ctx50, 40)

    @pytest.mark.parametrize("p", range(1, 11))
    def test_structure_and_cancellation(self, p):
        for coeffs in (cbar_quarter_coefficients(p), sbar_quarter_coefficients(p) if p >= 2 else None):
            if coeffs is None:
                continue
            assert all(c.is_rational() for c in coeffs)
        expected = {(4 * p, -(3 * p + 1)), (4 * p + 4, -(3 * p + 3))}
        assert {(g, h) for g, h, _ in cbar_at_quarter(p).monomials()} == expected
        if p >= 2:
            assert {(g, h) for g, h, _ in sbar_at_quarter(p).monomials()} == expected

    @pytest.mark.parametrize("p", range(0, 7))
    def test_series_certification(self, p, ctx50):
        half_pi = ctx50.mp.pi / 2
        c = sum_hyperbolic(SumKind(SumVariant.CBAR, 2 * p, 2), half_pi, ctx50)
        assert abs(c - eval_gamma_pi(cbar_at_quarter(p), ctx50)) < _tol(ctx50, 30)
        if p >= 1:
            s = sum_hyperbolic(SumKind(SumVariant.SBAR, 2 * p, 2), half_pi, ctx50)
            assert abs(s - eval_gamma_pi(sbar_at_quarter(p), ctx50)) < _tol(ctx50, 30)


@pytest.mark.parametrize("p", range(1, 5))
def test_alpha_beta_lemma(p, ctx50):
    mp = ctx50.mp
    alpha, beta = mp.pi / 2, 2 * mp.pi
    pi = mp.pi

    def S(variant, q, m, y):
        return sum_hyperbolic(SumKind(variant, q, m), y, ctx50)

    first = (alpha ** (2 * p + 1) * S(SumVariant.CBAR, 2 * p, 2, alpha)
             - (-1) ** p * p * pi ** (2 * p) / 2 ** (2 * p - 2) * S(SumVariant.SPRIME, 2 * p - 1, 1, beta)
             + (-1) ** p * pi ** (2 * p) / 2 ** (2 * p) * beta * S(SumVariant.DSPRIME, 2 * p, 2, beta))
    delta = mp.mpf(1) / 2 if p == 1 else 0
    second = (alpha ** (2 * p) * S(SumVariant.SBAR, 2 * p, 2, alpha)
              - 2 * p * (-1) ** (p - 1) * pi ** (2 * p - 2) * beta * S(SumVariant.S, 2 * p - 1, 1, beta)
              - (-1) ** p * pi ** (2 * p - 2) * beta ** 2 * S(SumVariant.DS, 2 * p, 2, beta)
              - delta)
    assert abs(first) < _tol(ctx50, 30)
    assert abs(second) < _tol(ctx50, 30)


class TestSumHyperbolic:
    def test_dominant_terms(self, ctx50):
        mp = ctx50.mp
        value = sum_hyperbolic(SumKind(SumVariant.S, 1, 1), 20, ctx50)
        assert mp.nstr(value, 5) == "4.1223e-9"
        direct = sum(n / mp.sinh(20 * n) for n in range(1, 12))
        assert abs(value - direct) < _tol(ctx50, 55)

    def test_sbar_quarter(self, ctx50):
        value = sum_hyperbolic(SumKind(SumVariant.SBAR, 4, 2), ctx50.mp.pi / 2, ctx50)
        assert abs(value - eval_gamma_pi(sbar_at_quarter(2), ctx50)) < _tol(ctx50, 30)

    @pytest.mark.parametrize("y", [0, -1])
    def test_rejects_nonpositive_y(self, y, ctx50):
        with pytest.raises(DomainError):
            sum_hyperbolic(SumKind(SumVariant.S, 1, 1), y, ctx50)

    def test_rejects_divergent_ds(self, ctx50):
        with pytest.raises(DomainError):
            sum_hyperbolic(SumKind(SumVariant.DS, 1, 1), 1, ctx50)

    def test_kind_validation(self):
        assert SumKind("cbar", 2, 2).variant is SumVariant.CBAR
        with pytest.raises(ValueError):
            SumKind(SumVariant.S, 1, 0)
