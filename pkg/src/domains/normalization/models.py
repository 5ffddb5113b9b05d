from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from src.domains.group.models import GroupElement
from src.domains.series.maps import MapSeries
from src.domains.series.models import Signature
from src.domains.series.series import DefiningSeries, Series


@dataclass(frozen=True)
class NormalFormType:
    """Target family: α selects the log model, β couples F₃₃ to (F₂₂)²."""

    alpha: Fraction | float = 0
    beta: Fraction | float = 0

    @property
    def is_chern_moser(self) -> bool:
        return self.alpha == 0 and self.beta == 0


class DefectEntry(NamedTuple):
    weight: int
    label: str
    norm: float


@dataclass
class NormalFormReport:
    is_normal: bool
    defects: list[DefectEntry] = field(default_factory=list)

    def residuals(self) -> dict[int, float]:
        out: dict[int, float] = {}
        for entry in self.defects:
            out[entry.weight] = max(out.get(entry.weight, 0.0), entry.norm)
        return out


@dataclass(frozen=True)
class TotalMap:
    """Φ = (Z, W): holomorphic series in (z, w) through weight `trunc`."""

    sig: Signature
    trunc: int
    Z: tuple[Series, ...]
    W: Series

    def difference(self, other: TotalMap, z_weight: int | None = None, w_weight: int | None = None) -> float:
        """Largest coefficient gap, comparing Z through z_weight and W through w_weight."""
        z_weight = min(self.trunc, other.trunc) - 1 if z_weight is None else z_weight
        w_weight = min(self.trunc, other.trunc) if w_weight is None else w_weight
        gaps = [(a - b).up_to_weight(z_weight).max_abs() for a, b in zip(self.Z, other.Z)]
        gaps.append((self.W - other.W).up_to_weight(w_weight).max_abs())
        return max(gaps)


@dataclass
class NormalizationResult:
    """Linear part σ and higher part E of Φ = E∘φ_σ, the normal form, and per-weight defects."""

    sigma: GroupElement
    high: MapSeries
    output: DefiningSeries
    residuals: dict[int, float]
    target: NormalFormType
