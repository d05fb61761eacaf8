"""Exact values of the mixed Berndt-type integrals

    B(s) = int_0^oo x**s (sinh x +- sin x) / ((sinh^2 x + sin^2 x)(cosh x +- cos x)) dx

and of the matching four-term combinations of generalized Barnes zeta values.

Family names give the two signs in order: ``PM`` is ``sinh + sin`` over
``cosh - cos``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Optional, Tuple

from .exact_arith import GammaPiExpr
from .hyperbolic_closed_forms import cbar_at_quarter, sbar_at_quarter


class InvalidSpec(ValueError):
    """Parameters outside the families' admissible range."""


class Family(enum.Enum):
    PP = "pp"  # sinh + sin, cosh + cos
    MP = "mp"  # sinh - sin, cosh + cos
    PM = "pm"  # sinh + sin, cosh - cos
    MM = "mm"  # sinh - sin, cosh - cos

    @property
    def numerator_sign(self) -> int:
        return 1 if self in (Family.PP, Family.PM) else -1

    @property
    def denominator_sign(self) -> int:
        return 1 if self in (Family.PP, Family.MP) else -1


_MIN_EXPONENT = {Family.MP: 0, Family.PM: 4, Family.PP: 2, Family.MM: 2}
_RESIDUE = {Family.MP: 0, Family.PM: 0, Family.PP: 2, Family.MM: 2}


@dataclass(frozen=True)
class IntegralSpec:
    family: Family
    exponent: int

    def __post_init__(self) -> None:
        if not isinstance(self.family, Family):
            try:
                object.__setattr__(self, "family", Family(str(self.family).lower()))
            except ValueError:
                raise InvalidSpec(f"unknown family {self.family!r}") from None

    def validate(self) -> "IntegralSpec":
        s = self.exponent
        if not isinstance(s, int) or s < _MIN_EXPONENT[self.family] or s % 4 != _RESIDUE[self.family]:
            raise InvalidSpec(
                f"family {self.family.name} needs s = {_RESIDUE[self.family]} mod 4 "
                f"and s >= {_MIN_EXPONENT[self.family]}, got s = {s}"
            )
        return self

    @property
    def m(self) -> int:
        """Index ``m`` with ``s = 4m`` (MP, PM) or ``s = 4m - 2`` (PP, MM)."""
        return (self.exponent + 2) // 4 if _RESIDUE[self.family] == 2 else self.exponent // 4


def _gp(coeff, g: int, h) -> GammaPiExpr:
    return GammaPiExpr.monomial(coeff, g, h)


# stored low-order values
MP_ZERO = _gp(Fraction(1, 32), 4, -2) - _gp(Fraction(1, 8), 0, 1)
MM_TWO = _gp(Fraction(1, 64), 4, -1) - _gp(Fraction(1, 8), 0, 1)


def closed_form(spec: IntegralSpec) -> GammaPiExpr:
    """Exact value of the integral described by ``spec``."""
    spec = spec.validate()
    fam, s, m = spec.family, spec.exponent, spec.m
    if fam is Family.MP and s == 0:
        return MP_ZERO
    if fam is Family.MM and s == 2:
        return MM_TWO
    sign = (-1) ** (m - 1)
    if fam in (Family.MP, Family.PM):
        quarter = cbar_at_quarter(2 * m) if fam is Family.MP else sbar_at_quarter(2 * m)
        return quarter.shift(0, 4 * m + 1).scale(Fraction(sign, 2 * 4 ** m))
    quarter = cbar_at_quarter(2 * m - 1) if fam is Family.PP else sbar_at_quarter(2 * m - 1)
    return quarter.shift(0, 4 * m - 1).scale(Fraction(sign, 4 ** m))


def structure_basis(spec: IntegralSpec) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """The two ``(gamma_exp, pi_exp)`` monomials allowed in the closed form.

    Ordered as in the structure theorems: the first carries ``c1/d1/e1/f1``.
    """
    fam, m = spec.family, spec.m
    if fam in (Family.MP, Family.PM):
        return (8 * m, -2 * m), (8 * m + 4, -(2 * m + 2))
    return (8 * m - 4, -(2 * m - 1)), (8 * m, -(2 * m + 1))


def basis_coefficients(spec: IntegralSpec) -> Tuple[Fraction, Fraction]:
    """Coefficients of ``closed_form(spec)`` on :func:`structure_basis`.

    Raises :class:`ArithmeticError` if the value has any other monomial.
    """
    value = closed_form(spec)
    basis = structure_basis(spec)
    extra = [(g, h) for g, h, _ in value.monomials() if (g, h) not in basis]
    if extra:
        raise ArithmeticError(f"{spec} has monomials outside the structure basis: {extra}")
    return tuple(value.coefficient(g, h) for g, h in basis)


@dataclass(frozen=True)
class CoefficientRow:
    m: int
    c1: Optional[Fraction] = None
    c2: Optional[Fraction] = None
    d1: Optional[Fraction] = None
    d2: Optional[Fraction] = None
    e1: Optional[Fraction] = None
    e2: Optional[Fraction] = None
    f1: Optional[Fraction] = None
    f2: Optional[Fraction] = None


def coefficient_row(m: int) -> CoefficientRow:
    c1, c2 = basis_coefficients(IntegralSpec(Family.MP, 4 * m))
    d1, d2 = basis_coefficients(IntegralSpec(Family.PP, 4 * m - 2))
    e1, e2 = basis_coefficients(IntegralSpec(Family.PM, 4 * m))
    f1 = f2 = None
    if m >= 2:
        f1, f2 = basis_coefficients(IntegralSpec(Family.MM, 4 * m - 2))
    return CoefficientRow(m, c1, c2, d1, d2, e1, e2, f1, f2)


def coefficient_table(m_max: int) -> List[CoefficientRow]:
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    return [coefficient_row(m) for m in range(1, m_max + 1)]


@dataclass(frozen=True)
class ConjectureEntry:
    m: int
    c2_plus_e2: Fraction
    d1_plus_f1: Optional[Fraction]

    @property
    def holds(self) -> bool:
        return self.c2_plus_e2 == 0 and (self.d1_plus_f1 is None or self.d1_plus_f1 == 0)


def check_conjecture(m_max: int) -> List[ConjectureEntry]:
    """Exact sums ``c2 + e2`` and ``d1 + f1`` per ``m``; evidence, not proof."""
    out = []
    for row in coefficient_table(m_max):
        df = row.d1 + row.f1 if row.f1 is not None else None
        out.append(ConjectureEntry(row.m, row.c2 + row.e2, df))
    return out


# -- generalized Barnes zeta combinations -----------------------------------

# exponent bookkeeping for weights: i**k stored as k mod 4
A4 = (complex(2, -2), complex(2, 2), complex(1, -1), complex(1, 1))
SIGMA_MIXED = (1, 1, -1, -1)
SIGMA_PLAIN = (1, 1, 1, 1)


class ComboKind(enum.Enum):
    PP = "pp"
    MP = "mp"
    PM = "pm"
    MM = "mm"

    @property
    def family(self) -> Family:
        return Family(self.value)


_I_POWERS = (1, 1j, -1, -1j)


@dataclass(frozen=True)
class BarnesComboSpec:
    """``sum_j w_j zeta_4(s, 3 + i**j | a4; sigma)`` matching one integral family.

    ``sinh - sin`` numerators pair with ``w_j = i**(j-2)``; ``sinh + sin``
    with ``(-i)**(j-2)``.  A ``cosh + cos`` factor makes the last two
    directions alternating.
    """

    kind: ComboKind
    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.kind, ComboKind):
            try:
                object.__setattr__(self, "kind", ComboKind(str(self.kind).lower()))
            except ValueError:
                raise InvalidSpec(f"unknown combination kind {self.kind!r}") from None
        if not isinstance(self.m, int) or self.m < 1:
            raise InvalidSpec("m must be a positive integer")

    @property
    def integral(self) -> IntegralSpec:
        fam = self.kind.family
        s = 4 * self.m if fam in (Family.MP, Family.PM) else 4 * self.m - 2
        return IntegralSpec(fam, s).validate()

    @property
    def s(self) -> int:
        return self.integral.exponent + 1

    @property
    def weights(self) -> Tuple[complex, ...]:
        # j = 1..4; i**(j-2) or (-i)**(j-2)
        step = 1 if self.kind.family.numerator_sign < 0 else 3
        return tuple(_I_POWERS[(step * (j - 2)) % 4] for j in range(1, 5))

    @property
    def shifts(self) -> Tuple[complex, ...]:
        return tuple(3 + _I_POWERS[j % 4] for j in range(1, 5))

    @property
    def a4(self) -> Tuple[complex, ...]:
        return A4

    @property
    def sigma4(self) -> Tuple[int, ...]:
        return SIGMA_MIXED if self.kind.family.denominator_sign > 0 else SIGMA_PLAIN


def barnes_combination_exact(spec: BarnesComboSpec) -> GammaPiExpr:
    """Exact ``sum_j w_j zeta_4(s, 3 + i**j | a4; sigma)``, i.e. ``B / (4 (s-1)!)``."""
    return closed_form(spec.integral).scale(Fraction(1, 4 * factorial(spec.s - 1)))
