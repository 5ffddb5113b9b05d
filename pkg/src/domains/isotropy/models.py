from __future__ import annotations

from dataclasses import dataclass, field

from src.core.config.settings import settings
from src.domains.isotropy.errors import InvalidContext, SphericalSeries
from src.domains.normalization.predicate import condition_values
from src.domains.scalars.gaussian import CoefficientMode
from src.domains.series.models import Signature
from src.domains.series.series import DefiningSeries, Series


@dataclass(frozen=True)
class IsotropyContext:
    """
    Lowest nonspherical component F_l of a normal form.

    F_l is pure weight l ≥ 4, has only types with min(s,t) ≥ 2 and satisfies
    ΔF₂₂ = Δ²F₂₃ = Δ³F₃₃ = 0. It is stored with room for weight l + 1.
    """

    F_l: DefiningSeries
    l: int

    @property
    def sig(self) -> Signature:
        return self.F_l.sig

    @property
    def mode(self) -> CoefficientMode:
        return self.F_l.mode

    @property
    def k(self) -> int:
        """l = 2k − 1 or l = 2k."""
        return (self.l + 1) // 2

    @classmethod
    def build(cls, F_l: Series, l: int, tol: float | None = None) -> IsotropyContext:
        if l < 4:
            raise InvalidContext(f"weight l = {l} is below 4")
        stray = [m for m in F_l.terms if m.weight != l]
        if stray:
            raise InvalidContext(f"term {stray[0]} has weight {stray[0].weight}, expected {l}")
        low = [m for m in F_l.terms if min(m.type) < 2]
        if low:
            raise InvalidContext(f"term {low[0]} has type {low[0].type}")

        limit = 0.0
        if F_l.mode == CoefficientMode.FLOAT:
            limit = (settings.RESIDUAL_TOL if tol is None else tol) * max(1.0, F_l.max_abs())
        for (label, m), c in condition_values(F_l, l).items():
            if abs(complex(c)) > limit:
                raise InvalidContext(f"{label} is nonzero at {m}")
        stored = DefiningSeries.from_series(F_l.with_trunc(l + 2))
        return cls(stored, l)

    @classmethod
    def from_normal_form(cls, F: DefiningSeries, tol: float | None = None) -> IsotropyContext:
        """Context of the lowest nonzero component of F − ⟨z,z⟩."""
        l, F_l = lowest_component(F, tol)
        return cls.build(F_l, l, tol)


def lowest_component(F: DefiningSeries, tol: float | None = None) -> tuple[int, Series]:
    """(l, F_l) for the first weight l ≥ 3 at which F differs from ⟨z,z⟩."""
    R = F - Series.hermitian(F.sig, F.trunc, F.mode)
    limit = 0.0
    if F.mode == CoefficientMode.FLOAT:
        limit = (settings.RESIDUAL_TOL if tol is None else tol) * max(1.0, F.max_abs())
    for weight in range(3, F.trunc + 1):
        part = R.weight_part(weight)
        if limit:
            part = part.chop(limit)
        if not part.is_zero:
            return weight, part
    raise SphericalSeries(F.trunc)


@dataclass
class KappaDisplayReport:
    """Which u-exponent in the displayed ⟨κ,z⟩ reproduces the κ fixed by Δ²H₂₃ = 0."""

    derived: list
    gaps: dict[str, float] = field(default_factory=dict)
    matching: str | None = None
