from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from src.domains.series.errors import InvalidSignature


@dataclass(frozen=True)
class Signature:
    """Hermitian form ⟨z,z⟩ = Σ ε_α z^α z̄^α with e plus signs followed by n − e minus signs."""

    n: int
    e: int

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.e <= self.n:
            raise InvalidSignature(self.n, self.e)

    @property
    def eps(self) -> tuple[int, ...]:
        return tuple(1 if alpha < self.e else -1 for alpha in range(self.n))

    @property
    def is_definite(self) -> bool:
        return self.e in (0, self.n)

    @property
    def admits_flip(self) -> bool:
        """True when some U satisfies ⟨Uz,Uz⟩ = −⟨z,z⟩."""
        return 2 * self.e == self.n

    def __str__(self) -> str:
        return f"(n={self.n}, e={self.e})"


class Monomial(NamedTuple):
    """z^zi · z̄^zj · u^l. Holomorphic series reuse it with zj = 0 and l the power of w."""

    zi: tuple[int, ...]
    zj: tuple[int, ...]
    l: int

    @property
    def weight(self) -> int:
        return sum(self.zi) + sum(self.zj) + 2 * self.l

    @property
    def type(self) -> tuple[int, int]:
        return sum(self.zi), sum(self.zj)

    @property
    def mirror(self) -> Monomial:
        return Monomial(self.zj, self.zi, self.l)

    def sort_key(self) -> tuple:
        return (self.weight, sum(self.zi), self.zi, self.zj, self.l)

    def times(self, other: Monomial) -> Monomial:
        return Monomial(
            tuple(x + y for x, y in zip(self.zi, other.zi)),
            tuple(x + y for x, y in zip(self.zj, other.zj)),
            self.l + other.l,
        )

    @classmethod
    def one(cls, n: int) -> Monomial:
        zero = (0,) * n
        return cls(zero, zero, 0)

    def __str__(self) -> str:
        parts = []
        for alpha, k in enumerate(self.zi):
            if k:
                parts.append(f"z{alpha + 1}^{k}" if k > 1 else f"z{alpha + 1}")
        for alpha, k in enumerate(self.zj):
            if k:
                parts.append(f"zb{alpha + 1}^{k}" if k > 1 else f"zb{alpha + 1}")
        if self.l:
            parts.append(f"u^{self.l}" if self.l > 1 else "u")
        return "*".join(parts) or "1"


class DecomposeMode(str, Enum):
    BY_WEIGHT = "by_weight"
    BY_TYPE = "by_type"


def unit_index(n: int, alpha: int, k: int = 1) -> tuple[int, ...]:
    return tuple(k if beta == alpha else 0 for beta in range(n))
