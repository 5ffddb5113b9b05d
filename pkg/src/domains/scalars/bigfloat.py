from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import mpmath

from src.core.config.settings import settings
from src.domains.scalars.errors import PrecisionMismatch, PrecisionTooLow
from src.domains.scalars.quadext import RADICAND, QuadExt

MIN_BITS = 64


def _check_bits(bits: int) -> None:
    if bits < MIN_BITS:
        raise PrecisionTooLow(bits, MIN_BITS)


def mpf_from_fraction(x: Fraction | int, bits: int) -> mpmath.mpf:
    """Correctly rounded image of a rational at the given precision."""
    x = Fraction(x)
    with mpmath.workprec(bits):
        # mpf division of exact integers rounds once
        return mpmath.mpf(x.numerator) / mpmath.mpf(x.denominator)


@dataclass(frozen=True)
class BigFloat:
    """
    Binary floating-point value carried together with its precision.

    Every arithmetic result is rounded to nearest at that precision. Mixing
    two BigFloats of different precision is refused instead of silently
    keeping the lower one.
    """

    value: mpmath.mpf
    bits: int

    def __post_init__(self) -> None:
        _check_bits(self.bits)

    @classmethod
    def of(cls, x, bits: int | None = None) -> BigFloat:
        bits = bits or settings.PRECISION_BITS
        _check_bits(bits)
        if isinstance(x, BigFloat):
            x = x.value
        if isinstance(x, QuadExt):
            return quadext_to_float(x, bits)
        if isinstance(x, (int, Rational)):
            return cls(mpf_from_fraction(x, bits), bits)
        with mpmath.workprec(bits):
            return cls(+mpmath.mpf(x), bits)

    def _lift(self, other) -> BigFloat | None:
        if isinstance(other, BigFloat):
            if other.bits != self.bits:
                raise PrecisionMismatch(self.bits, other.bits)
            return other
        if isinstance(other, (int, Rational, QuadExt)):
            return BigFloat.of(other, self.bits)
        return None

    def _wrap(self, value) -> BigFloat:
        return BigFloat(value, self.bits)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        with mpmath.workprec(self.bits):
            return self._wrap(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        with mpmath.workprec(self.bits):
            return self._wrap(self.value - o.value)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        with mpmath.workprec(self.bits):
            return self._wrap(self.value * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        with mpmath.workprec(self.bits):
            return self._wrap(self.value / o.value)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        with mpmath.workprec(self.bits):
            if isinstance(k, BigFloat):
                return self._wrap(mpmath.power(self.value, k.value))
            return self._wrap(mpmath.power(self.value, k))

    def __neg__(self) -> BigFloat:
        return self._wrap(-self.value)

    def __abs__(self) -> BigFloat:
        return self._wrap(abs(self.value))

    def sqrt(self) -> BigFloat:
        with mpmath.workprec(self.bits):
            return self._wrap(mpmath.sqrt(self.value))

    def __float__(self) -> float:
        return float(self.value)

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __lt__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.value < o.value

    def __le__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.value <= o.value

    def __gt__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.value > o.value

    def __ge__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.value >= o.value

    def __hash__(self) -> int:
        return hash((self.value, self.bits))

    def digits(self, n: int = 12) -> str:
        return mpmath.nstr(self.value, n)

    def __str__(self) -> str:
        # decimal digits carried by the precision
        return mpmath.nstr(self.value, max(1, int(self.bits * 0.30103)))


def quadext_to_float(x: QuadExt, bits: int | None = None) -> BigFloat:
    """
    Round a + b√17 to a BigFloat with relative error at most 2^(1−bits).

    When a and b have opposite signs the sum cancels; it is then evaluated as
    N(x)/(a − b√17), whose terms share a sign.
    """
    bits = bits or settings.PRECISION_BITS
    _check_bits(bits)
    if not x:
        return BigFloat(mpmath.mpf(0), bits)
    guard = bits + max(32, bits // 8)
    with mpmath.workprec(guard):
        root = mpmath.sqrt(RADICAND)
        a = mpf_from_fraction(x.a, guard)
        b = mpf_from_fraction(x.b, guard)
        if x.a * x.b >= 0:
            value = a + b * root
        else:
            value = mpf_from_fraction(x.norm, guard) / (a - b * root)
    with mpmath.workprec(bits):
        return BigFloat(+value, bits)
