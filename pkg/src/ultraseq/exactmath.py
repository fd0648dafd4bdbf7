"""Exact arithmetic: Fibonacci/Lucas numbers and the quadratic field Q(sqrt 5).

Python integers are already arbitrary precision, so they serve directly as
the big-integer type; rationals are ``fractions.Fraction``.  ``QuadExt``
represents an exact element a + b*sqrt(5) and is the workhorse behind every
golden-ratio closed form.  No floating point is used anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class QuadExt:
    """An element a + b*sqrt(5) with rational components.

    Equality is exact componentwise equality of the canonical Fractions.
    """

    a: Fraction
    b: Fraction

    def __init__(self, a: Scalar, b: Scalar = 0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    @staticmethod
    def _coerce(other) -> "QuadExt":
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.a * o.a + 5 * self.b * o.b,
                       self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        norm = self.a * self.a - 5 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("zero element of Q(sqrt 5)")
        return QuadExt(self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "QuadExt":
        return quad_pow(self, n)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def as_integer(self) -> int:
        """Return the value as a plain int; raises if it is not one."""
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return int(self.a)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 5 ** 0.5

    def __repr__(self) -> str:
        return f"QuadExt({self.a}, {self.b})"


#: golden ratio (1 + sqrt 5) / 2
PHI = QuadExt(Fraction(1, 2), Fraction(1, 2))
#: conjugate root 1 - phi = (1 - sqrt 5) / 2
PSI = QuadExt(Fraction(1, 2), Fraction(-1, 2))
ONE = QuadExt(1)
SQRT5 = QuadExt(0, 1)


def quad_pow(x: QuadExt, n: int) -> QuadExt:
    """Exact n-fold product by repeated squaring, n >= 0."""
    if n < 0:
        raise ValueError("quad_pow requires n >= 0")
    result = ONE
    base = x
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def _fib_pair(n: int) -> tuple[int, int]:
    """(F_n, F_{n+1}) for n >= 0, by fast doubling."""
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fib(n: int) -> int:
    """Fibonacci number, any integer index (backward recurrence for n < 0)."""
    if n >= 0:
        return _fib_pair(n)[0]
    f = _fib_pair(-n)[0]
    return f if (-n) % 2 == 1 else -f


def lucas(n: int) -> int:
    """Lucas number, any integer index (L_0 = 2, L_1 = 1)."""
    # L_n = F_{n-1} + F_{n+1}, valid for every integer n
    return fib(n - 1) + fib(n + 1)


def two_point_constants(lambda_e: int, lambda_e1: int) -> tuple[QuadExt, QuadExt]:
    """Solve for (beta, gamma) with beta + gamma = lambda_e and
    beta*phi + gamma*psi = lambda_e1, exactly in Q(sqrt 5)."""
    beta = (QuadExt(lambda_e1) - PSI * lambda_e) / SQRT5
    gamma = (PHI * lambda_e - QuadExt(lambda_e1)) / SQRT5
    return beta, gamma


def closed_form_affine(a0: int, a1: int, eps: int, n: int) -> int:
    """n-th term of L_0 = a0, L_1 = a1, L_n = L_{n-1} + L_{n-2} + eps.

    Evaluated exactly through Q(sqrt 5); the shifted sequence L_n + eps
    satisfies the pure two-term recurrence, so the irrational part cancels.
    """
    if n < 0:
        raise ValueError("closed_form_affine requires n >= 0")
    beta, gamma = two_point_constants(a0 + eps, a1 + eps)
    value = beta * quad_pow(PHI, n) + gamma * quad_pow(PSI, n) - eps
    return value.as_integer()
