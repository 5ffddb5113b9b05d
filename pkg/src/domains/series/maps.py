from __future__ import annotations

from dataclasses import dataclass

from src.domains.scalars.gaussian import CoefficientMode
from src.domains.series.models import Signature
from src.domains.series.series import Series


@dataclass(frozen=True)
class MapSeries:
    """
    Higher-order part of a holomorphic map (z, w) ↦ (z + f, w + g).

    f and g are holomorphic series in (z, w) stored with zj = 0 and the u
    slot as the power of w; weight(z) = 1, weight(w) = 2.
    """

    sig: Signature
    trunc: int
    f: tuple[Series, ...]
    g: Series

    @classmethod
    def identity(cls, sig: Signature, trunc: int, mode: CoefficientMode = CoefficientMode.EXACT) -> MapSeries:
        zero = Series.zero(sig, trunc, mode)
        return cls(sig, trunc, tuple(zero for _ in range(sig.n)), zero)

    @property
    def mode(self) -> CoefficientMode:
        return self.g.mode

    def is_identity(self, tol: float = 0.0) -> bool:
        return all(part.max_abs() <= tol for part in (*self.f, self.g))

    def max_abs(self) -> float:
        return max(part.max_abs() for part in (*self.f, self.g))

    def __sub__(self, other: MapSeries) -> MapSeries:
        return MapSeries(
            self.sig,
            min(self.trunc, other.trunc),
            tuple(a - b for a, b in zip(self.f, other.f)),
            self.g - other.g,
        )
