from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from numbers import Rational

from src.domains.scalars.errors import DivisionByZero

RADICAND = 17


def _sign(x: Fraction | int) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class QuadExt:
    """
    Exact element a + b·√17 of the real quadratic field Q(√17).

    Comparisons are decided exactly by comparing a² with 17·b²; no float is
    ever consulted.
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0) -> None:
        self._a = Fraction(a)
        self._b = Fraction(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def sqrt17(cls) -> QuadExt:
        return cls(0, 1)

    def __repr__(self) -> str:
        return f"QuadExt({self._a}, {self._b})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        sign = "+" if self._b > 0 else "-"
        return f"{self._a}{sign}{abs(self._b)}√{RADICAND}"

    def _coerce(self, other) -> QuadExt | None:
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, (int, Rational)):
            return QuadExt(other)
        return None

    def conj(self) -> QuadExt:
        """Galois conjugate a − b√17."""
        return QuadExt(self._a, -self._b)

    @property
    def norm(self) -> Fraction:
        return self._a * self._a - RADICAND * self._b * self._b

    def sign(self) -> int:
        sa, sb = _sign(self._a), _sign(self._b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: the larger magnitude wins
        return sa if self._a * self._a > RADICAND * self._b * self._b else sb

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __neg__(self) -> QuadExt:
        return QuadExt(-self._a, -self._b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self._a - o._a, self._b - o._b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(
            self._a * o._a + RADICAND * self._b * o._b,
            self._a * o._b + self._b * o._a,
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadExt:
        if not self:
            raise DivisionByZero(self)
        # x⁻¹ = conj(x)/N(x); N(x) ≠ 0 because √17 is irrational
        n = self.norm
        return QuadExt(self._a / n, -self._b / n)

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

    def __pow__(self, k: int) -> QuadExt:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadExt(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __abs__(self) -> QuadExt:
        return -self if self.sign() < 0 else self

    def is_rational(self) -> bool:
        return self._b == 0


def quadext_arith(x: QuadExt, y: QuadExt, op: str) -> QuadExt:
    """Field operation by symbol; ÷ by zero raises DivisionByZero."""
    if op == "+":
        return x + y
    if op in ("-", "−"):
        return x - y
    if op in ("*", "×"):
        return x * y
    if op in ("/", "÷"):
        return x / y
    raise ValueError(f"Unknown field operation {op!r}")


# roots of x² − 3x − 2 = 0
LAMBDA_1 = QuadExt(Fraction(3, 2), Fraction(-1, 2))
LAMBDA_2 = QuadExt(Fraction(3, 2), Fraction(1, 2))
