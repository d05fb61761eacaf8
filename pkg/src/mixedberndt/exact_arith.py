"""Exact arithmetic: rationals, the field Q(sqrt 2), and Gamma(1/4)/pi monomial sums.

``BigRational`` is :class:`fractions.Fraction`; it already keeps ``gcd == 1``
and a positive denominator, with zero stored as ``0/1``.

A :class:`GammaPiExpr` is a finite sum ``sum c * G**g * pi**h`` where ``G`` is
the formal symbol Gamma(1/4).  The pi exponent is stored doubled so that the
half-integer powers carried by ``z0 = G**2 / (2 pi**(3/2))`` stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

BigRational = Fraction

RationalLike = Union[int, Fraction]


class NonRationalError(ArithmeticError):
    """A value expected to lie in Q still carries a sqrt(2) component."""


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class Sqrt2Number:
    """The number ``rat + irr * sqrt(2)`` with rational parts."""

    rat: Fraction = Fraction(0)
    irr: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rat", as_rational(self.rat))
        object.__setattr__(self, "irr", as_rational(self.irr))

    @classmethod
    def coerce(cls, value: Union["Sqrt2Number", RationalLike]) -> "Sqrt2Number":
        if isinstance(value, Sqrt2Number):
            return value
        return cls(as_rational(value), Fraction(0))

    def is_rational(self) -> bool:
        return self.irr == 0

    def conjugate(self) -> "Sqrt2Number":
        return Sqrt2Number(self.rat, -self.irr)

    def norm(self) -> Fraction:
        return self.rat * self.rat - 2 * self.irr * self.irr

    def __add__(self, other):
        try:
            o = Sqrt2Number.coerce(other)
        except TypeError:
            return NotImplemented
        return Sqrt2Number(self.rat + o.rat, self.irr + o.irr)

    __radd__ = __add__

    def __neg__(self) -> "Sqrt2Number":
        return Sqrt2Number(-self.rat, -self.irr)

    def __sub__(self, other):
        try:
            o = Sqrt2Number.coerce(other)
        except TypeError:
            return NotImplemented
        return Sqrt2Number(self.rat - o.rat, self.irr - o.irr)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = Sqrt2Number.coerce(other)
        except TypeError:
            return NotImplemented
        return Sqrt2Number(
            self.rat * o.rat + 2 * self.irr * o.irr,
            self.rat * o.irr + self.irr * o.rat,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Sqrt2Number":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt 2)")
        return Sqrt2Number(self.rat / n, -self.irr / n)

    def __truediv__(self, other):
        try:
            o = Sqrt2Number.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Sqrt2Number.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Sqrt2Number":
        if k < 0:
            return sqrt2_pow(self.inverse(), -k)
        return sqrt2_pow(self, k)

    def __eq__(self, other) -> bool:
        try:
            o = Sqrt2Number.coerce(other)
        except TypeError:
            return NotImplemented
        return self.rat == o.rat and self.irr == o.irr

    def __hash__(self) -> int:
        if self.irr == 0:
            return hash(self.rat)
        return hash((self.rat, self.irr))

    def __bool__(self) -> bool:
        return bool(self.rat) or bool(self.irr)

    def __repr__(self) -> str:
        return f"Sqrt2Number({self.rat}, {self.irr})"

    def __str__(self) -> str:
        if self.irr == 0:
            return str(self.rat)
        return f"{self.rat} + {self.irr}*sqrt(2)"


SQRT2 = Sqrt2Number(0, 1)


def sqrt2_pow(base: Sqrt2Number, k: int) -> Sqrt2Number:
    """``base**k`` for ``k >= 0`` by binary exponentiation."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    base = Sqrt2Number.coerce(base)
    result = Sqrt2Number(1, 0)
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


def rational_part_assert(value: Union[Sqrt2Number, RationalLike]) -> Fraction:
    """Return ``value`` as a rational, raising if its sqrt(2) part survived."""
    v = Sqrt2Number.coerce(value)
    if v.irr != 0:
        raise NonRationalError(f"sqrt(2) component did not cancel: {v}")
    return v.rat


# -- Gamma(1/4) / pi monomial sums ------------------------------------------

Key = tuple  # (gamma_exp, pi_exp_times2)


def _pi_key(pi_exp: RationalLike) -> int:
    doubled = 2 * as_rational(pi_exp)
    if doubled.denominator != 1:
        raise ValueError(f"pi exponent {pi_exp} is not a half-integer")
    return int(doubled)


class GammaPiExpr:
    """Immutable sum of monomials ``c * Gamma(1/4)**g * pi**(h2/2)``.

    Zero is the empty sum, no stored coefficient is zero, and equality is
    structural on the canonical term map.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Key, RationalLike], Iterable] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (g, h2), c in items:
            key = (int(g), int(h2))
            acc[key] = acc.get(key, Fraction(0)) + as_rational(c)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def monomial(cls, coeff: RationalLike, gamma_exp: int = 0, pi_exp: RationalLike = 0) -> "GammaPiExpr":
        return cls({(gamma_exp, _pi_key(pi_exp)): coeff})

    @classmethod
    def constant(cls, coeff: RationalLike) -> "GammaPiExpr":
        return cls.monomial(coeff)

    @classmethod
    def zero(cls) -> "GammaPiExpr":
        return cls()

    @property
    def terms(self) -> dict:
        """Copy of the map ``(gamma_exp, pi_exp_times2) -> coefficient``."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple]:
        """Terms sorted by gamma exponent, then pi exponent."""
        return iter(sorted(self._terms.items()))

    def monomials(self) -> list:
        """``[(gamma_exp, pi_exp, coeff)]`` with ``pi_exp`` a Fraction."""
        return [(g, Fraction(h2, 2), c) for (g, h2), c in self.items()]

    def coefficient(self, gamma_exp: int, pi_exp: RationalLike) -> Fraction:
        return self._terms.get((gamma_exp, _pi_key(pi_exp)), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def has_integer_pi_exponents(self) -> bool:
        return all(h2 % 2 == 0 for _, h2 in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other):
        other = _coerce_expr(other)
        if other is None:
            return NotImplemented
        merged = dict(self._terms)
        for k, v in other._terms.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return GammaPiExpr(merged)

    __radd__ = __add__

    def __neg__(self) -> "GammaPiExpr":
        return GammaPiExpr({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = _coerce_expr(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _coerce_expr(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for (g1, h1), c1 in self._terms.items():
            for (g2, h2), c2 in other._terms.items():
                k = (g1 + g2, h1 + h2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return GammaPiExpr(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / as_rational(other))
        return NotImplemented

    def __pow__(self, k: int) -> "GammaPiExpr":
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use shift")
        result = GammaPiExpr.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, factor: RationalLike) -> "GammaPiExpr":
        f = as_rational(factor)
        return GammaPiExpr({k: v * f for k, v in self._terms.items()})

    def shift(self, d_gamma: int, d_pi: RationalLike) -> "GammaPiExpr":
        """Multiply by ``Gamma(1/4)**d_gamma * pi**d_pi``."""
        dh2 = _pi_key(d_pi)
        return GammaPiExpr({(g + d_gamma, h2 + dh2): v for (g, h2), v in self._terms.items()})

    def __eq__(self, other) -> bool:
        other = _coerce_expr(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"GammaPiExpr({dict(sorted(self._terms.items()))!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for g, h, c in self.monomials():
            factors = []
            if g:
                factors.append("G" if g == 1 else f"G^{g}")
            if h:
                factors.append("pi" if h == 1 else f"pi^{h}" if h > 0 else f"pi^({h})")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce_expr(value) -> Union[GammaPiExpr, None]:
    if isinstance(value, GammaPiExpr):
        return value
    if isinstance(value, (int, Fraction)):
        return GammaPiExpr.constant(value)
    return None


def gamma_pi_arith(a: GammaPiExpr, b=None, op: str = "add", *, factor=None,
                   d_gamma: int = 0, d_pi: RationalLike = 0) -> GammaPiExpr:
    """Functional front end for the ring operations on :class:`GammaPiExpr`.

    ``op`` is one of ``add``, ``sub``, ``mul``, ``scale`` (uses ``factor``) or
    ``shift`` (uses ``d_gamma``/``d_pi``).
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(factor)
    if op == "shift":
        return a.shift(d_gamma, d_pi)
    raise ValueError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class RamanujanPoint:
    """Ramanujan's parameters ``(x, y, z, z')`` at a point with known values.

    Only ``x = 1/2`` is supported, where ``y = pi``,
    ``z = G**2 / (2 pi**(3/2))`` and ``z' = 4 pi**(1/2) / G**2``.
    """

    x: Fraction
    y_exact: str
    z0: GammaPiExpr
    z0_prime: GammaPiExpr

    @classmethod
    def half(cls) -> "RamanujanPoint":
        return cls(
            x=Fraction(1, 2),
            y_exact="pi",
            z0=GammaPiExpr.monomial(Fraction(1, 2), 2, Fraction(-3, 2)),
            z0_prime=GammaPiExpr.monomial(4, -2, Fraction(1, 2)),
        )


LEMNISCATIC = RamanujanPoint.half()
