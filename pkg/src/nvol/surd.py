"""Exact arithmetic in real quadratic fields: values of the form a + b*sqrt(d).

``SurdValue`` stores two rationals and one square-free positive integer d,
giving exact addition, multiplication, division and ordering inside a fixed
field Q(sqrt(d)).  Rationals embed as b = 0 and mix freely with any d.
Ordering against plain rationals is exact (sign analysis, no floating
point); ``float()`` gives the machine-precision value.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from typing import Union

Rational = Fraction

RationalLike = Union[int, Fraction]
ScalarLike = Union[int, Fraction, "SurdValue"]


def _squarefree_split(d: int) -> tuple[int, int]:
    """Write d = s**2 * d0 with d0 square-free; return (s, d0)."""
    if d <= 0:
        raise ValueError(f"radicand must be positive, got {d}")
    s, d0, p = 1, d, 2
    while p * p <= d0:
        while d0 % (p * p) == 0:
            d0 //= p * p
            s *= p
        p += 1
    return s, d0


@total_ordering
class SurdValue:
    """a + b*sqrt(d) with exact rational a, b and square-free d >= 1.

    Normal form: d is square-free, and b == 0 forces d == 1, so equal
    values have equal component triples (making hashing consistent).
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: RationalLike, b: RationalLike = 0, d: int = 1) -> None:
        a, b = Fraction(a), Fraction(b)
        s, d0 = _squarefree_split(int(d))
        b *= s
        if d0 == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            d0 = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d0)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SurdValue is immutable")

    @classmethod
    def of(cls, x: ScalarLike) -> SurdValue:
        if isinstance(x, SurdValue):
            return x
        return cls(Fraction(x))

    @classmethod
    def sqrt(cls, d: int) -> SurdValue:
        return cls(0, 1, d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_rational(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def _common_d(self, other: SurdValue) -> int:
        if self.d == other.d:
            return self.d
        if self.b == 0:
            return other.d
        if other.b == 0:
            return self.d
        raise ValueError(f"incompatible radicands sqrt({self.d}) and sqrt({other.d})")

    def _sign(self) -> int:
        """Exact sign of a + b*sqrt(d)."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a >= 0 and b > 0:
            return 1
        if a <= 0 and b < 0:
            return -1
        # a and b have opposite signs: compare a**2 against b**2 * d.
        lhs, rhs = a * a, b * b * self.d
        if lhs == rhs:
            return 0
        if a > 0:  # b < 0
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: ScalarLike) -> SurdValue:
        if isinstance(other, float):
            return NotImplemented
        other = SurdValue.of(other)
        d = self._common_d(other)
        return SurdValue(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self) -> SurdValue:
        return SurdValue(-self.a, -self.b, self.d)

    def __sub__(self, other: ScalarLike) -> SurdValue:
        return self + (-SurdValue.of(other))

    def __rsub__(self, other: ScalarLike) -> SurdValue:
        return (-self) + other

    def __mul__(self, other: ScalarLike) -> SurdValue:
        if isinstance(other, float):
            return NotImplemented
        other = SurdValue.of(other)
        d = self._common_d(other)
        return SurdValue(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> SurdValue:
        if isinstance(other, float):
            return NotImplemented
        other = SurdValue.of(other)
        d = self._common_d(other)
        norm = other.a * other.a - other.b * other.b * d
        if norm == 0:
            if other.a == 0 and other.b == 0:
                raise ZeroDivisionError("division by zero SurdValue")
            raise ZeroDivisionError("division by a value of zero field norm")
        conj_num = self * SurdValue(other.a, -other.b, d)
        return SurdValue(conj_num.a / norm, conj_num.b / norm, d)

    def __rtruediv__(self, other: ScalarLike) -> SurdValue:
        return SurdValue.of(other) / self

    def __pow__(self, exponent: int) -> SurdValue:
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = SurdValue(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, SurdValue):
            try:
                d = self._common_d(other)
            except ValueError:
                return False
            del d
            return self.a == other.a and self.b == other.b
        if isinstance(other, float):
            return float(self) == other
        return NotImplemented

    def __lt__(self, other: object) -> bool:
        if isinstance(other, float):
            return float(self) < other
        if not isinstance(other, (int, Fraction, SurdValue)):
            return NotImplemented
        return (self - SurdValue.of(other))._sign() < 0

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __repr__(self) -> str:
        return f"SurdValue({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})"
        if self.b == 1:
            tail = root
        elif self.b == -1:
            tail = f"-{root}"
        else:
            tail = f"{self.b}*{root}"
        if self.a == 0:
            return tail
        sign = "+" if self.b > 0 else "-"
        mag = tail.lstrip("-")
        return f"{self.a} {sign} {mag}"


def exact_sign(x: Union[int, Fraction, SurdValue]) -> int:
    """Sign of an exact scalar: -1, 0, or 1."""
    if isinstance(x, SurdValue):
        return x._sign()
    return (x > 0) - (x < 0)
