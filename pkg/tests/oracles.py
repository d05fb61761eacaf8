"""Independent oracles used only by the tests.

None of these share code paths with the package: they rebuild the needed
quantities from classical series with plain Fractions or mpmath.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import List

from mpmath.ctx_mp import MPContext


def sinh_cosh_series(n_terms: int):
    """Maclaurin coefficients of sinh and cosh up to ``u**(n_terms - 1)``."""
    sinh = [Fraction(0)] * n_terms
    cosh = [Fraction(0)] * n_terms
    for k in range(n_terms):
        if k % 2:
            sinh[k] = Fraction(1, factorial(k))
        else:
            cosh[k] = Fraction(1, factorial(k))
    return sinh, cosh


def tanh_series(n_terms: int) -> List[Fraction]:
    """Coefficients of tanh by exact long division of sinh by cosh."""
    num, den = sinh_cosh_series(n_terms)
    out = [Fraction(0)] * n_terms
    for k in range(n_terms):
        acc = num[k] - sum(out[j] * den[k - j] for j in range(k))
        out[k] = acc / den[0]
    return out


def sn_series_numeric(x: Fraction, n_terms: int) -> List[Fraction]:
    """Coefficients of sn(u) for a fixed rational modulus ``x = k**2``.

    Solves the first-order system ``sn' = cn dn``, ``cn' = -sn dn``,
    ``dn' = -x sn cn`` term by term, unrelated to the package's recurrence.
    """
    sn = [Fraction(0)] * n_terms
    cn = [Fraction(0)] * n_terms
    dn = [Fraction(0)] * n_terms
    cn[0] = dn[0] = Fraction(1)

    def conv(a, b, k):
        return sum(a[i] * b[k - i] for i in range(k + 1))

    for k in range(n_terms - 1):
        sn[k + 1] = conv(cn, dn, k) / (k + 1)
        cn[k + 1] = -conv(sn, dn, k) / (k + 1)
        dn[k + 1] = -x * conv(sn, cn, k) / (k + 1)
    return sn


def square_series(c: List[Fraction]) -> List[Fraction]:
    n = len(c)
    return [sum(c[i] * c[k - i] for i in range(k + 1)) for k in range(n)]


def zeta4_hurwitz(s: int, omega, sigma_pair: int, dps: int):
    """``zeta_4(s, omega | a4; sigma)`` for ``a4 = (2-2i, 2+2i, 1-i, 1+i)``.

    ``sigma`` is ``(1, 1, sigma_pair, sigma_pair)``.  The lattice collapses
    to ``sum_{k,l} c_k c_l (omega + k(1-i) + l(1+i))**(-s)`` with
    ``c_k = sigma_pair**k (floor(k/2) + 1)``.  The inner sum over ``l`` splits
    by parity into Hurwitz zeta values, and the outer sum is accelerated.
    """
    mp = MPContext()
    mp.dps = dps
    b = mp.mpc(1, 1)
    c = mp.mpc(1, -1)
    omega = mp.mpc(omega)
    sign = -1 if sigma_pair < 0 else 1

    def inner(A):
        total = mp.mpc(0)
        for e in (0, 1):
            v = (A + e * b) / (2 * b)
            total += sign ** e * (2 * b) ** (-s) * (mp.zeta(s - 1, v) + (1 - v) * mp.zeta(s, v))
        return total

    total = mp.mpc(0)
    for e in (0, 1):
        total += sign ** e * mp.nsum(lambda r: (r + 1) * inner(omega + (2 * r + e) * c),
                                     [0, mp.inf], method="richardson")
    return total
