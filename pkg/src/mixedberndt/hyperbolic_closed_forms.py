"""Closed forms of the alternating reciprocal hyperbolic sums

    Cbar_{2p,2}(y) = sum (-1)**(n-1) n**(2p) / cosh(n y)**2
    Sbar_{2p,2}(y) = sum (-1)**(n-1) n**(2p) / sinh(n y)**2

as polynomials in Ramanujan's ``x, z, z'`` (with ``sqrt(1 - x)``), and their
exact values at ``y = pi/2`` in terms of Gamma(1/4) and pi.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Tuple

from .exact_arith import (
    LEMNISCATIC,
    SQRT2,
    GammaPiExpr,
    Sqrt2Number,
    rational_part_assert,
)
from .jacobi_maclaurin import q_poly, sn_squared_coeffs
from .poly_ring import (
    ONE_MINUS_X,
    Poly,
    SqrtFactorExpr,
    derivative_of_poly_times_sqrt,
)

_X = Poly((0, 1))
_X_ONE_MINUS_X = Poly((0, 1, -1))


class SumVariant(enum.Enum):
    S = "s"
    SBAR = "sbar"
    CBAR = "cbar"
    SPRIME = "sprime"
    DS = "ds"
    DSPRIME = "dsprime"


@dataclass(frozen=True)
class SumKind:
    """One of the six hyperbolic series families with exponents ``p`` and ``m``."""

    variant: SumVariant
    p: int
    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.variant, SumVariant):
            object.__setattr__(self, "variant", SumVariant(self.variant))
        if self.m < 1:
            raise ValueError("m must be a positive integer")


class ZExpr:
    """Sum of ``coeff(x) * z**a * z'**b`` with ``coeff`` a :class:`SqrtFactorExpr`."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Tuple[int, int], SqrtFactorExpr]):
        self.terms = {k: v.normalized() for k, v in terms.items() if not v.is_zero()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZExpr):
            return NotImplemented
        return self.terms.keys() == other.terms.keys() and all(
            self.terms[k] == other.terms[k] for k in self.terms
        )

    def __repr__(self) -> str:
        body = ", ".join(f"z^{a} z'^{b}: {c!r}" for (a, b), c in sorted(self.terms.items()))
        return f"ZExpr({body})"

    def evaluate(self, x, sqrt_one_minus_x, z, z_prime):
        total = 0
        for (a, b), c in self.terms.items():
            total = total + c.evaluate(x, sqrt_one_minus_x) * z ** a * z_prime ** b
        return total


def cbar_general(p: int) -> ZExpr:
    """``Cbar_{2p,2}(y)`` as a ZExpr (two terms, ``z^(2p+1) z'`` and ``z^(2p+2)``)."""
    if p < 1:
        raise ValueError("cbar_general needs p >= 1")
    sign = (-1) ** p
    shifted = q_poly(p - 1).compose_one_minus_x()  # q_{2p-1}(1 - x)
    zp_coeff = _X_ONE_MINUS_X * shifted * Fraction(sign * p, 2 ** (2 * p - 1))
    deriv = derivative_of_poly_times_sqrt(SqrtFactorExpr(shifted, 1))
    z_coeff = SqrtFactorExpr(deriv.poly_part * _X_ONE_MINUS_X * Fraction(sign, 2 ** (2 * p)), -1)
    return ZExpr({
        (2 * p + 1, 1): SqrtFactorExpr(zp_coeff, 1),
        (2 * p + 2, 0): z_coeff,
    })


def sbar_general(p: int) -> ZExpr:
    """``Sbar_{2p,2}(y)`` as a ZExpr; ``p = 1`` is the stored three-term form."""
    if p < 1:
        raise ValueError("sbar_general needs p >= 1")
    if p == 1:
        eighth = Fraction(1, 8)
        x1x = _X_ONE_MINUS_X * eighth
        return ZExpr({
            (2, 2): SqrtFactorExpr(x1x * _X_ONE_MINUS_X * 4),
            (3, 1): SqrtFactorExpr(x1x * ONE_MINUS_X * 4),
            (4, 0): SqrtFactorExpr(-x1x),
        })
    sign = (-1) ** (p - 1)
    shifted = sn_squared_coeffs(p).compose_one_minus_x()  # Q_{2p-2}(1 - x)
    weight = Fraction(sign, 2 ** (2 * p))
    z_coeff = _X_ONE_MINUS_X * (ONE_MINUS_X * shifted).derivative() * weight
    zp_coeff = ONE_MINUS_X * _X_ONE_MINUS_X * shifted * (2 * p * weight)
    return ZExpr({
        (2 * p + 2, 0): SqrtFactorExpr(z_coeff),
        (2 * p + 1, 1): SqrtFactorExpr(zp_coeff),
    })


# -- duplication transform at x0 = 1/2 --------------------------------------

@dataclass(frozen=True)
class DuplicationImage:
    """Parameters at ``y0/2`` expressed through ``z0, z0'`` at ``x0``.

    ``z = z_scale * z0`` and ``z' = zp_from_zp * z0' + zp_from_z * z0``.
    """

    x: Sqrt2Number
    sqrt_one_minus_x: Sqrt2Number
    z_scale: Sqrt2Number
    zp_from_zp: Sqrt2Number
    zp_from_z: Sqrt2Number


def duplication_image_half() -> DuplicationImage:
    s = SQRT2 / 2  # sqrt(x0) for x0 = 1/2
    one_minus_x0 = Fraction(1, 2)
    t = 1 + s
    return DuplicationImage(
        x=4 * s / (t * t),
        sqrt_one_minus_x=(1 - s) / t,
        z_scale=t,
        zp_from_zp=s * t ** 5 / one_minus_x0 / 2,
        zp_from_z=t ** 4 / one_minus_x0 / 4,
    )


def substitute_duplication(expr: ZExpr) -> Dict[Tuple[int, int], Sqrt2Number]:
    """Rewrite ``expr`` at ``y = pi/2`` as ``{(e, f): c}`` meaning ``c z0**e z0'**f``."""
    img = duplication_image_half()
    out: Dict[Tuple[int, int], Sqrt2Number] = {}
    for (a, b), coeff in expr.terms.items():
        base = coeff.evaluate(img.x, img.sqrt_one_minus_x) * img.z_scale ** a
        for i in range(b + 1):
            c = base * comb(b, i) * img.zp_from_zp ** i * img.zp_from_z ** (b - i)
            key = (a + b - i, i)
            out[key] = out.get(key, Sqrt2Number()) + c
    return {k: v for k, v in out.items() if v}


_R = (SQRT2 - 1) / (SQRT2 + 1)  # (1 - sqrt x0)/(1 + sqrt x0) at x0 = 1/2
_SQ2M1 = SQRT2 - 1
_SQ2P1 = SQRT2 + 1


def cbar_quarter_coefficients(p: int) -> Tuple[Sqrt2Number, Sqrt2Number]:
    """Coefficients of ``z0^(2p+1) z0'`` and ``z0^(2p+2)`` in ``Cbar_{2p,2}(pi/2)``.

    Uses the palindromic coefficients ``a_j`` of ``q_{2p-1}`` directly.
    """
    a = q_poly(p - 1).coeffs
    sign = (-1) ** p
    s1 = sum((_R ** (2 * j) * aj for j, aj in enumerate(a)), Sqrt2Number())
    k1 = _SQ2P1 ** (2 * p - 2) * s1 * Fraction(sign * p, 2 ** (3 * p))
    s2 = sum(
        (aj * ((2 - SQRT2) * p - (4 * j + 2)) * _SQ2M1 ** (4 * j - 2) for j, aj in enumerate(a)),
        Sqrt2Number(),
    )
    k2 = SQRT2 * _SQ2P1 ** (2 * p - 4) * s2 * Fraction(sign, 2 ** (3 * p + 1))
    return k1, k2


def sbar_quarter_coefficients(p: int) -> Tuple[Sqrt2Number, Sqrt2Number]:
    """Coefficients of ``z0^(2p+1) z0'`` and ``z0^(2p+2)`` in ``Sbar_{2p,2}(pi/2)``, ``p >= 2``."""
    b = sn_squared_coeffs(p).coeffs
    sign = (-1) ** (p - 1)
    s1 = sum((_R ** (2 * j) * bj for j, bj in enumerate(b)), Sqrt2Number())
    l1 = _SQ2P1 ** (2 * p - 4) * s1 * Fraction(sign * p, 2 ** (3 * p))
    s2 = sum(
        (bj * (_SQ2M1 * Fraction(p, 4) - SQRT2 * Fraction(j + 1, 2)) * _SQ2M1 ** (4 * j)
         for j, bj in enumerate(b)),
        Sqrt2Number(),
    )
    l2 = _SQ2P1 ** (2 * p - 4) * s2 * Fraction(sign, 2 ** (3 * p - 2))
    return l1, l2


def z_monomials_to_gamma_pi(coeffs: Dict[Tuple[int, int], Sqrt2Number]) -> GammaPiExpr:
    """Substitute ``z0 = G^2/(2 pi^(3/2))`` and ``z0' = 4 pi^(1/2)/G^2``."""
    total = GammaPiExpr()
    for (e, f), c in coeffs.items():
        q = rational_part_assert(c)
        total = total + (LEMNISCATIC.z0 ** e * LEMNISCATIC.z0_prime ** f).scale(q)
    return total


# Cbar_{0,2}(pi/2) lies outside the general formula; value confirmed by series summation.
CBAR_0_QUARTER = GammaPiExpr.constant(Fraction(1, 2)) - GammaPiExpr.monomial(Fraction(1, 16), 4, -3)
# Sbar_{2,2}(pi/2)
SBAR_1_QUARTER = GammaPiExpr.monomial(Fraction(1, 16), 4, -4) + GammaPiExpr.monomial(Fraction(1, 2), 0, -2)


@lru_cache(maxsize=None)
def cbar_at_quarter(p: int) -> GammaPiExpr:
    """Exact ``Cbar_{2p,2}(pi/2)``."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    if p == 0:
        return CBAR_0_QUARTER
    k1, k2 = cbar_quarter_coefficients(p)
    return z_monomials_to_gamma_pi({(2 * p + 1, 1): k1, (2 * p + 2, 0): k2})


@lru_cache(maxsize=None)
def sbar_at_quarter(p: int) -> GammaPiExpr:
    """Exact ``Sbar_{2p,2}(pi/2)``."""
    if p < 1:
        raise ValueError("p must be positive")
    if p == 1:
        return SBAR_1_QUARTER
    l1, l2 = sbar_quarter_coefficients(p)
    return z_monomials_to_gamma_pi({(2 * p + 1, 1): l1, (2 * p + 2, 0): l2})
