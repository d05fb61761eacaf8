"""Maclaurin coefficient polynomials of the Jacobi function sn(u) and sn(u)**2.

With ``x = k**2`` write

    sn(u)   = sum_n q_{2n+1}(x) (-1)**n u**(2n+1) / (2n+1)!
    sn(u)^2 = sum_n Q_{2n+2}(x) (-1)**n u**(2n+2) / (2n+2)!

The q's come from solving ``y'' = -(1 + x) y + 2 x y**3`` term by term with
``y = u + O(u**3)`` over Q[x].
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import List, Tuple

from .poly_ring import Poly

_ONE_PLUS_X = Poly((1, 1))
_TWO_X = Poly((0, 2))

_lock = threading.Lock()
# _c[n] is the Maclaurin coefficient of u**(2n+1) in sn(u), a polynomial in x
_c: List[Poly] = [Poly((1,))]
# _sq[m] is the coefficient of u**(2m+2) in sn(u)**2
_sq: List[Poly] = [Poly((1,))]


def _extend(n_max: int) -> None:
    with _lock:
        while len(_c) <= n_max:
            n = len(_c)
            # coefficient of u**(2n-1) in y**3 = sum_m [u^(2m+2)] y^2 * c_{n-2-m}
            cube = Poly()
            for m in range(n - 1):
                cube = cube + _sq[m] * _c[n - 2 - m]
            rhs = -(_ONE_PLUS_X * _c[n - 1]) + _TWO_X * cube
            _c.append(rhs * Fraction(1, (2 * n + 1) * (2 * n)))
            _sq.append(sum((_c[i] * _c[n - i] for i in range(n + 1)), Poly()))


@dataclass(frozen=True)
class SnCoeffTable:
    max_index: int
    q_polys: Tuple[Poly, ...]

    def __getitem__(self, n: int) -> Poly:
        return self.q_polys[n]


@dataclass(frozen=True)
class SnSquaredTable:
    max_index: int
    Q_polys: Tuple[Poly, ...]

    def __getitem__(self, n: int) -> Poly:
        return self.Q_polys[n]


def _to_integer_poly(p: Poly) -> Poly:
    out = []
    for c in p.coeffs:
        c = Fraction(c)
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient {c} in sn expansion")
        out.append(int(c))
    return Poly(out)


def q_poly(n: int) -> Poly:
    """``q_{2n+1}(x)``; integer coefficients, degree ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _extend(n)
    sign_fact = (-1) ** n * factorial(2 * n + 1)
    return _to_integer_poly(_c[n] * sign_fact)


def sn_maclaurin(n_max: int) -> SnCoeffTable:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return SnCoeffTable(n_max, tuple(q_poly(n) for n in range(n_max + 1)))


def sn_squared_coeffs(p: int) -> Poly:
    """``Q_{2p-2}(x) = sum_j C(2p-2, 2j+1) q_{2j+1}(x) q_{2p-2j-3}(x)``."""
    if p < 2:
        raise ValueError("sn_squared_coeffs needs p >= 2")
    n = p - 2
    total = Poly()
    for j in range(n + 1):
        total = total + q_poly(j) * q_poly(n - j) * comb(2 * n + 2, 2 * j + 1)
    return total


def sn_squared_table(n_max: int) -> SnSquaredTable:
    """Entry ``n`` holds ``Q_{2n+2}``."""
    return SnSquaredTable(n_max, tuple(sn_squared_coeffs(n + 2) for n in range(n_max + 1)))
