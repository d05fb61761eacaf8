"""Dense univariate polynomials over an exact coefficient ring.

Coefficients may be ints, Fractions or :class:`Sqrt2Number` values; the only
requirement is ring arithmetic and comparison with ``0``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple


class Poly:
    """Immutable polynomial ``sum coeffs[i] * x**i`` without trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        result = Poly((1,))
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return len(self.coeffs) == len(o.coeffs) and all(
            a == b for a, b in zip(self.coeffs, o.coeffs)
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, point):
        """Horner evaluation."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose_one_minus_x(self) -> "Poly":
        """Expand ``p(1 - x)``."""
        acc = Poly()
        one_minus_x = Poly((1, -1))
        for c in reversed(self.coeffs):
            acc = acc * one_minus_x + Poly((c,))
        return acc

    def reversed(self) -> "Poly":
        """Coefficients reversed within ``degree`` (``x**n p(1/x)``)."""
        return Poly(self.coeffs[::-1])

    def is_palindromic(self) -> bool:
        return all(a == b for a, b in zip(self.coeffs, self.coeffs[::-1]))

    def map_coeffs(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.coeffs])


def _coerce(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)) or hasattr(value, "irr"):
        return Poly((value,))
    return None


ONE_MINUS_X = Poly((1, -1))


def poly_arith(a: Poly, b=None, op: str = "add"):
    """Functional front end: ``add``, ``mul``, ``derivative``, ``eval``
    (``b`` is the point) or ``compose_one_minus_x``."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "derivative":
        return a.derivative()
    if op == "eval":
        return a(b)
    if op == "compose_one_minus_x":
        return a.compose_one_minus_x()
    raise ValueError(f"unknown operation {op!r}")


class SqrtFactorExpr:
    """``poly_part(x) * (1 - x)**(sqrt_power / 2)`` with ``sqrt_power`` in {-1, 0, 1}.

    Equality compares values, so ``(1-x) * (1-x)**(-1/2)`` equals
    ``1 * (1-x)**(1/2)``.
    """

    __slots__ = ("poly_part", "sqrt_power")

    def __init__(self, poly_part: Poly, sqrt_power: int = 0):
        if sqrt_power not in (-1, 0, 1):
            raise ValueError("sqrt_power must be -1, 0 or 1")
        self.poly_part = poly_part if isinstance(poly_part, Poly) else Poly(poly_part)
        self.sqrt_power = sqrt_power

    def normalized(self) -> "SqrtFactorExpr":
        """Absorb a factor ``(1 - x)`` into the radical where possible."""
        if self.sqrt_power == -1 and not self.poly_part.is_zero() and self.poly_part(1) == 0:
            return SqrtFactorExpr(divide_by_one_minus_x(self.poly_part), 1)
        return self

    def is_zero(self) -> bool:
        return self.poly_part.is_zero()

    def _lift(self, power: int) -> Poly:
        # poly_part * (1-x)**((self.sqrt_power - power)/2), power <= sqrt_power
        steps, rem = divmod(self.sqrt_power - power, 2)
        if rem:
            raise ValueError("radical parities differ")
        return self.poly_part * ONE_MINUS_X ** steps

    def __add__(self, other: "SqrtFactorExpr") -> "SqrtFactorExpr":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.sqrt_power, other.sqrt_power)
        return SqrtFactorExpr(self._lift(low) + other._lift(low), low).normalized()

    def __neg__(self) -> "SqrtFactorExpr":
        return SqrtFactorExpr(-self.poly_part, self.sqrt_power)

    def __sub__(self, other: "SqrtFactorExpr") -> "SqrtFactorExpr":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SqrtFactorExpr):
            power = self.sqrt_power + other.sqrt_power
            poly = self.poly_part * other.poly_part
            if power == 2:
                poly, power = poly * ONE_MINUS_X, 0
            elif power == -2:
                poly, power = divide_by_one_minus_x(poly), 0
            return SqrtFactorExpr(poly, power).normalized()
        return SqrtFactorExpr(self.poly_part * other, self.sqrt_power)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SqrtFactorExpr):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if (self.sqrt_power - other.sqrt_power) % 2:
            return False
        low = min(self.sqrt_power, other.sqrt_power)
        return self._lift(low) == other._lift(low)

    def __hash__(self) -> int:
        n = self.normalized()
        return hash((n.poly_part, n.sqrt_power))

    def __repr__(self) -> str:
        return f"SqrtFactorExpr({self.poly_part!r}, {self.sqrt_power})"

    def evaluate(self, x, sqrt_one_minus_x):
        """Value at ``x`` given the chosen branch of ``sqrt(1 - x)``."""
        v = self.poly_part(x)
        if self.sqrt_power == 1:
            return v * sqrt_one_minus_x
        if self.sqrt_power == -1:
            return v / sqrt_one_minus_x
        return v


def divide_by_one_minus_x(p: Poly) -> Poly:
    """Exact quotient ``p / (1 - x)``; raises if ``p(1) != 0``."""
    if p.is_zero():
        return p
    if p(1) != 0:
        raise ValueError("polynomial is not divisible by (1 - x)")
    # p = (1 - x) q  <=>  q = -(p / (x - 1)); synthetic division by (x - 1)
    n = p.degree
    q = [0] * n
    carry = 0
    for i in range(n, 0, -1):
        carry = carry + p[i]
        q[i - 1] = carry
    return -Poly(q)


def derivative_of_poly_times_sqrt(e: SqrtFactorExpr) -> SqrtFactorExpr:
    """``d/dx [P(x) sqrt(1-x)] = [P'(x)(1-x) - P(x)/2] (1-x)**(-1/2)``."""
    if e.sqrt_power != 1:
        raise ValueError("derivative_of_poly_times_sqrt needs sqrt_power == +1")
    p = e.poly_part
    return SqrtFactorExpr(p.derivative() * ONE_MINUS_X - p * Fraction(1, 2), -1)
