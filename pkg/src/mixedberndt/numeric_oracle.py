"""Arbitrary-precision numerics used to certify the exact closed forms.

Every routine takes a :class:`PrecisionContext`, which owns a private
mpmath context; nothing here touches ``mpmath.mp``.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence, Tuple

from mpmath.ctx_mp import MPContext

from .berndt_integrals import BarnesComboSpec, Family, IntegralSpec, InvalidSpec, closed_form
from .exact_arith import GammaPiExpr
from .hyperbolic_closed_forms import SumKind, SumVariant
from .kernels import lattice_box_sum

DEFAULT_DIGITS_ENV = "BERNDT_DEFAULT_DIGITS"


class DomainError(ValueError):
    """Parameters outside the region where the requested representation holds."""


class ConvergenceError(ArithmeticError):
    """Quadrature refinement did not reach the requested accuracy."""


@dataclass(frozen=True)
class PrecisionContext:
    decimal_digits: int = 40
    working_guard_digits: int = 10
    # integrand tail ~ tail_constant * x**s * exp(-2x)
    tail_constant: int = 8
    quad_max_degree: int = 10

    def __post_init__(self) -> None:
        if self.decimal_digits < 15:
            raise ValueError("decimal_digits must be at least 15")
        if self.working_guard_digits < 10:
            raise ValueError("working_guard_digits must be at least 10")

    @classmethod
    def default(cls) -> "PrecisionContext":
        return cls(int(os.environ.get(DEFAULT_DIGITS_ENV, "40")))

    @cached_property
    def mp(self) -> MPContext:
        ctx = MPContext()
        ctx.dps = self.decimal_digits + self.working_guard_digits
        return ctx

    @property
    def working_digits(self) -> int:
        return self.decimal_digits + self.working_guard_digits

    @property
    def eps(self):
        return self.mp.mpf(10) ** (-self.working_digits)

    @property
    def tolerance(self):
        """Pass threshold ``10**(-3/5 * digits)``."""
        return self.mp.mpf(10) ** (-Fraction(3 * self.decimal_digits, 5))


# -- constants and exact-value evaluation -----------------------------------

def gamma_quarter(ctx: PrecisionContext):
    mp = ctx.mp
    return mp.gamma(mp.mpf(1) / 4)


def gamma_quarter_agm(ctx: PrecisionContext):
    """Gamma(1/4) from the lemniscate constant, ``G**2 = 2 sqrt(2 pi) pi / AGM(1, sqrt 2)``."""
    mp = ctx.mp
    return mp.sqrt(2 * mp.sqrt(2 * mp.pi) * mp.pi / mp.agm(1, mp.sqrt(2)))


def eval_gamma_pi(e: GammaPiExpr, ctx: PrecisionContext):
    mp = ctx.mp
    g = gamma_quarter(ctx)
    root_pi = mp.sqrt(mp.pi)
    total = mp.mpf(0)
    for (g_exp, h2), c in e.items():
        total += mp.mpf(c.numerator) / c.denominator * g ** g_exp * root_pi ** h2
    return total


# -- hyperbolic series -------------------------------------------------------

def sum_hyperbolic(kind: SumKind, y, ctx: PrecisionContext):
    """Direct summation of one of the six series families at ``y``."""
    mp = ctx.mp
    y = mp.mpf(y)
    if y <= 0:
        raise DomainError("y must be positive")
    v, p, m = kind.variant, kind.p, kind.m
    odd = v in (SumVariant.SPRIME, SumVariant.DSPRIME)
    with_cosh = v in (SumVariant.DS, SumVariant.DSPRIME)
    if with_cosh and m < 2:
        raise DomainError("DS and DS' need m >= 2 to converge")
    # |term| <= k**p * 2**m * exp(-k*rate) with k the (odd) index
    rate = (m - 1 if with_cosh else m) * (y / 2 if odd else y)
    eps = ctx.eps
    total = mp.mpf(0)
    n = 1
    while True:
        k = 2 * n - 1 if odd else n
        arg = k * y / 2 if odd else k * y
        if v is SumVariant.CBAR:
            term = k ** p / mp.cosh(arg) ** m
        else:
            term = k ** p / mp.sinh(arg) ** m
            if with_cosh:
                term *= mp.cosh(arg)
        if v in (SumVariant.SBAR, SumVariant.CBAR) and n % 2 == 0:
            term = -term
        total += term
        bound = mp.mpf(k + (2 if odd else 1)) ** p * 2 ** m * mp.exp(-(k + (2 if odd else 1)) * rate)
        if bound < eps * max(1, abs(total)) and (p <= 0 or k * rate > p):
            return total
        n += 1


# -- quadrature of the mixed integrals --------------------------------------

def _cutoff(mp, rate, power, const, eps, floor=40):
    """Smallest convenient T with ``const * T**power * exp(-rate T) / rate < eps``."""
    target = mp.log(const / (rate * eps))
    t = mp.mpf(floor)
    for _ in range(60):
        nxt = (target + power * mp.log(t)) / rate
        if abs(nxt - t) < 1e-6:
            break
        t = nxt
    return max(mp.mpf(floor), mp.ceil(t))


def _panels(mp, upper):
    pts = [mp.mpf(0), mp.mpf(1) / 2, mp.mpf(1)]
    x = mp.mpf(2)
    while x < upper:
        pts.append(x)
        x *= 2
    pts.append(upper)
    return pts


def _berndt_integrand(spec: IntegralSpec, mp, eps):
    s = spec.exponent
    plus_num = spec.family.numerator_sign > 0
    plus_den = spec.family.denominator_sign > 0

    def sinh_minus_sin(x):
        if x < 1:
            # 2 * sum x**(4k+3)/(4k+3)!, avoids cancellation near 0
            term = x ** 3 / 6
            total = term
            k = 0
            x4 = x ** 4
            while abs(term) > eps * abs(total):
                term *= x4 / ((4 * k + 4) * (4 * k + 5) * (4 * k + 6) * (4 * k + 7))
                total += term
                k += 1
            return 2 * total
        return mp.sinh(x) - mp.sin(x)

    def f(x):
        h = x / 2
        sh, sn = mp.sinh(h), mp.sin(h)
        if plus_den:
            den = 2 * (mp.cosh(h) ** 2 - sn ** 2)
        else:
            den = 2 * (sh ** 2 + sn ** 2)
        num = mp.sinh(x) + mp.sin(x) if plus_num else sinh_minus_sin(x)
        return x ** s * num / ((mp.sinh(x) ** 2 + mp.sin(x) ** 2) * den)

    return f


def integrate_berndt(spec: IntegralSpec, ctx: PrecisionContext):
    """Tanh-sinh quadrature of the integral over subdivided panels of ``[0, T]``."""
    spec = spec.validate()
    mp = ctx.mp
    s = spec.exponent
    eps = ctx.eps
    ln10 = math.log(10)
    floor = max(40, int(3 * (s + ctx.working_digits * ln10) / 2))
    upper = _cutoff(mp, 2, s, ctx.tail_constant, eps, floor)
    f = _berndt_integrand(spec, mp, eps)
    value, err = mp.quad(f, _panels(mp, upper), error=True, maxdegree=ctx.quad_max_degree)
    if err > ctx.tolerance:
        raise ConvergenceError(f"quadrature error estimate {mp.nstr(err, 5)} for {spec}")
    return value


# -- generalized Barnes zeta -------------------------------------------------

@dataclass(frozen=True)
class BarnesParams:
    s: complex
    omega: complex
    a: Tuple[complex, ...]
    sigma: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(complex(x) for x in self.a))
        object.__setattr__(self, "sigma", tuple(int(x) for x in self.sigma))
        if len(self.a) != len(self.sigma):
            raise ValueError("a and sigma must have the same length")
        if any(x not in (1, -1) for x in self.sigma):
            raise ValueError("sigma entries must be +1 or -1")
        if any(x.real <= 0 for x in self.a):
            raise DomainError("every a_j needs a positive real part")
        if complex(self.omega).real <= 0:
            raise DomainError("omega needs a positive real part")

    @property
    def N(self) -> int:
        return len(self.a)


def _product_factor(mp, a, sigma):
    aa = [mp.mpc(x) for x in a]

    def prod(u):
        v = mp.mpf(1)
        for x, sg in zip(aa, sigma):
            v *= -mp.expm1(-x * u) if sg > 0 else 1 + mp.exp(-x * u)
        return v

    return prod


def barnes_zeta(params: BarnesParams, ctx: PrecisionContext):
    """``zeta_N(s, omega | a; sigma)`` from its Mellin integral representation."""
    mp = ctx.mp
    s = mp.mpc(params.s)
    if s.real <= params.N:
        raise DomainError(f"need Re(s) > N = {params.N}")
    omega = mp.mpc(params.omega)
    prod = _product_factor(mp, params.a, params.sigma)

    def f(u):
        return u ** (s - 1) * mp.exp(-omega * u) / prod(u)

    rate = omega.real
    min_re = min(x.real for x in params.a)
    const = mp.mpf(2) ** params.N / (1 - mp.exp(-min_re)) ** params.N
    upper = _cutoff(mp, rate, max(s.real - 1, 0), const, ctx.eps * abs(mp.gamma(s)), 8)
    value, err = mp.quad(f, _panels(mp, upper), error=True, maxdegree=ctx.quad_max_degree)
    if err > ctx.tolerance:
        raise ConvergenceError(f"Barnes quadrature error estimate {mp.nstr(err, 5)}")
    return value / mp.gamma(s)


def barnes_zeta_lattice(params: BarnesParams, K: int = 40) -> complex:
    """Low-precision box-truncated lattice sum, extrapolated in the box size.

    Uses the sums over ``[0, K/4]**N``, ``[0, K/2]**N`` and ``[0, K]**N`` and
    an Aitken step; meant as a float64 sanity check for ``Re(s) > N + 1``.
    """
    s = complex(params.s)
    if s.imag != 0 or s.real != int(s.real):
        raise DomainError("lattice oracle supports integer s only")
    s_int = int(s.real)
    sums = [lattice_box_sum(params.a, params.sigma, complex(params.omega), s_int, k)
            for k in (K // 4, K // 2, K)]
    d1, d2 = sums[1] - sums[0], sums[2] - sums[1]
    if d2 == 0 or d1 == d2:
        return sums[2]
    r = d1 / d2
    return sums[2] + d2 / (r - 1)


def _weighted_numerator(mp, weights, shifts, eps):
    """``sum_j w_j exp(-omega_j u)`` for ``omega_j = 3 + i**j``, series near 0."""
    w = [mp.mpc(x) for x in weights]
    om = [mp.mpc(x) for x in shifts]
    # W_k = sum_j w_j (omega_j - 3)**k only depends on k mod 4
    unit = [o - 3 for o in om]
    periodic = [mp.fsum(wj * uj ** k for wj, uj in zip(w, unit)) for k in range(4)]

    def value(u):
        if u < 1:
            total = mp.mpc(0)
            term = mp.mpf(1)
            k = 0
            while True:
                piece = periodic[k % 4] * term
                total += piece
                k += 1
                term *= -u / k
                if k > 8 and abs(term) < eps:
                    break
            return mp.exp(-3 * u) * total
        return mp.fsum(wj * mp.exp(-oj * u) for wj, oj in zip(w, om))

    return value


def barnes_combination_numeric(spec: BarnesComboSpec, ctx: PrecisionContext,
                               weights: Optional[Sequence[complex]] = None):
    """Evaluate ``sum_j w_j zeta_4(s, 3 + i**j | a4; sigma)`` through one integrand.

    The weights sum to zero, so the combined integrand vanishes to one extra
    order at ``u = 0`` and converges where the single terms would not.
    """
    mp = ctx.mp
    w = tuple(spec.weights if weights is None else weights)
    if abs(sum(w)) != 0:
        raise DomainError("combination weights must sum to zero")
    if all(x == 0 for x in w):
        return mp.mpc(0)
    s = spec.s
    numer = _weighted_numerator(mp, w, spec.shifts, ctx.eps)
    prod = _product_factor(mp, spec.a4, spec.sigma4)

    def f(u):
        return u ** (s - 1) * numer(u) / prod(u)

    upper = _cutoff(mp, 2, s - 1, 64, ctx.eps * mp.factorial(s - 1), 40)
    value, err = mp.quad(f, _panels(mp, upper), error=True, maxdegree=ctx.quad_max_degree)
    if err > ctx.tolerance:
        raise ConvergenceError(f"combination quadrature error estimate {mp.nstr(err, 5)}")
    return value / mp.factorial(s - 1)


# -- certification reports ---------------------------------------------------

class Method(enum.Enum):
    SERIES = "series"
    QUADRATURE = "quadrature"
    BARNES = "barnes"


@dataclass
class VerificationReport:
    exact: Optional[GammaPiExpr]
    exact_numeric: Optional[object]
    oracle_numeric: Optional[object]
    abs_error: Optional[object]
    rel_error: Optional[object]
    digits_used: int
    passed: bool
    method: Method
    diagnostic: str = ""
    subject: dict = field(default_factory=dict)


def compare(exact: GammaPiExpr, oracle, ctx: PrecisionContext, method: Method,
            subject: Optional[dict] = None) -> VerificationReport:
    mp = ctx.mp
    value = eval_gamma_pi(exact, ctx)
    err = abs(value - oracle)
    rel = err / abs(value) if value != 0 else err
    return VerificationReport(
        exact=exact,
        exact_numeric=value,
        oracle_numeric=oracle,
        abs_error=err,
        rel_error=rel,
        digits_used=ctx.decimal_digits,
        passed=bool(err < ctx.tolerance),
        method=method,
        subject=subject or {},
    )


def verify(spec: IntegralSpec, ctx: PrecisionContext) -> VerificationReport:
    """Closed form against quadrature; failures come back as a failed report."""
    subject = {"family": getattr(spec.family, "value", str(spec.family)), "s": spec.exponent}
    try:
        exact = closed_form(spec)
        oracle = integrate_berndt(spec, ctx)
    except (InvalidSpec, ConvergenceError, DomainError) as exc:
        return VerificationReport(None, None, None, None, None, ctx.decimal_digits, False,
                                  Method.QUADRATURE, f"{type(exc).__name__}: {exc}", subject)
    return compare(exact, oracle, ctx, Method.QUADRATURE, subject)


def verify_series(kind: SumKind, exact: GammaPiExpr, y, ctx: PrecisionContext) -> VerificationReport:
    oracle = sum_hyperbolic(kind, y, ctx)
    return compare(exact, oracle, ctx, Method.SERIES,
                   {"variant": kind.variant.value, "p": kind.p, "m": kind.m})


def verify_barnes(spec: BarnesComboSpec, exact: GammaPiExpr, ctx: PrecisionContext) -> VerificationReport:
    oracle = barnes_combination_numeric(spec, ctx)
    report = compare(exact, oracle.real, ctx, Method.BARNES,
                     {"kind": spec.kind.value, "m": spec.m, "s": spec.s})
    imag = abs(oracle.imag)
    if imag >= ctx.tolerance:
        report.passed = False
        report.diagnostic = f"imaginary part {ctx.mp.nstr(imag, 5)} not negligible"
    report.subject["imag"] = imag
    return report


__all__ = [
    "BarnesParams", "ConvergenceError", "DomainError", "Method", "PrecisionContext",
    "VerificationReport", "barnes_combination_numeric", "barnes_zeta", "barnes_zeta_lattice",
    "compare", "eval_gamma_pi", "gamma_quarter", "gamma_quarter_agm", "integrate_berndt",
    "sum_hyperbolic", "verify", "verify_barnes", "verify_series", "Family",
]
