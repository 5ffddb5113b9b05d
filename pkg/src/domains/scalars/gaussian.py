from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from numbers import Rational

from src.domains.scalars.errors import DivisionByZero, NotASquare


class CoefficientMode(str, Enum):
    EXACT = "exact"
    FLOAT = "float"


class GaussianRational:
    """
    Exact complex number (re + i·im)/den over the integers.

    The triple is kept in lowest terms with den > 0, so equal values have
    equal representations and hash alike.
    """

    __slots__ = ("_re", "_im", "_den")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        den = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        self._set(
            re.numerator * (den // re.denominator),
            im.numerator * (den // im.denominator),
            den,
        )

    def _set(self, re: int, im: int, den: int) -> None:
        g = math.gcd(re, im, den)
        if den < 0:
            g = -g
        self._re = re // g
        self._im = im // g
        self._den = den // g

    @classmethod
    def _from_ints(cls, re: int, im: int, den: int) -> GaussianRational:
        obj = cls.__new__(cls)
        obj._set(re, im, den)
        return obj

    @classmethod
    def from_complex(cls, value: complex) -> GaussianRational:
        """Exact image of a binary float pair; no rounding is introduced."""
        return cls(Fraction(value.real), Fraction(value.imag))

    @property
    def real(self) -> Fraction:
        return Fraction(self._re, self._den)

    @property
    def imag(self) -> Fraction:
        return Fraction(self._im, self._den)

    def conjugate(self) -> GaussianRational:
        return GaussianRational._from_ints(self._re, -self._im, self._den)

    def norm(self) -> Fraction:
        """Squared modulus re² + im²."""
        return Fraction(self._re * self._re + self._im * self._im, self._den * self._den)

    def _coerce(self, other) -> GaussianRational | None:
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Rational)):
            other = Fraction(other)
            return GaussianRational._from_ints(other.numerator, 0, other.denominator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational._from_ints(
            self._re * o._den + o._re * self._den,
            self._im * o._den + o._im * self._den,
            self._den * o._den,
        )

    __radd__ = __add__

    def __neg__(self) -> GaussianRational:
        return GaussianRational._from_ints(-self._re, -self._im, self._den)

    def __pos__(self) -> GaussianRational:
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational._from_ints(
            self._re * o._re - self._im * o._im,
            self._re * o._im + self._im * o._re,
            self._den * o._den,
        )

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        n2 = self._re * self._re + self._im * self._im
        if n2 == 0:
            raise DivisionByZero(self)
        # (re - i im)/den divided by (re² + im²)/den²
        return GaussianRational._from_ints(self._re * self._den, -self._im * self._den, n2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> GaussianRational:
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = GaussianRational._from_ints(1, 0, 1)
        for _ in range(abs(k)):
            result = result * base
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self._re == o._re and self._im == o._im and self._den == o._den

    def __hash__(self) -> int:
        if self._im == 0:
            return hash(Fraction(self._re, self._den))
        return hash((self._re, self._im, self._den))

    def __bool__(self) -> bool:
        return self._re != 0 or self._im != 0

    def __complex__(self) -> complex:
        return complex(self._re / self._den, self._im / self._den)

    def __abs__(self) -> float:
        return abs(complex(self))

    def __repr__(self) -> str:
        return f"GaussianRational({self.real}, {self.imag})"

    def __str__(self) -> str:
        if self._im == 0:
            return str(self.real)
        return f"({self.real})+({self.imag})i"


I = GaussianRational(0, 1)


def to_scalar(value, mode: CoefficientMode):
    """Coerce an int, Fraction, complex or GaussianRational into the mode's type."""
    if mode == CoefficientMode.FLOAT:
        return complex(value)
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, complex):
        return GaussianRational.from_complex(value)
    if isinstance(value, float):
        return GaussianRational(Fraction(value))
    return GaussianRational(value)


def to_real(value, mode: CoefficientMode):
    """Real scalar of the mode: Fraction in exact mode, float otherwise."""
    if mode == CoefficientMode.FLOAT:
        if isinstance(value, (complex, GaussianRational)):
            value = value.real
        return float(value)
    if isinstance(value, GaussianRational):
        return value.real
    return Fraction(value)


def imag_unit(mode: CoefficientMode):
    return 1j if mode == CoefficientMode.FLOAT else I


def rational_sqrt(value: Fraction) -> Fraction:
    """Exact square root of a nonnegative rational perfect square."""
    value = Fraction(value)
    if not is_rational_square(value):
        raise NotASquare(value)
    return Fraction(math.isqrt(value.numerator), math.isqrt(value.denominator))


def is_rational_square(value: Fraction) -> bool:
    value = Fraction(value)
    if value < 0:
        return False
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    return num * num == value.numerator and den * den == value.denominator
