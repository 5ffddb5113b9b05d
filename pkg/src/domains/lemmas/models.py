from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction


class MatrixFamily(str, Enum):
    A = "A_m"
    C = "C_m"
    B = "B_m"
    B2 = "B_m2"
    B3 = "B_m3"
    C2 = "C_m2"
    C3 = "C_m3"
    E = "E_m_s"


@dataclass(frozen=True)
class BandMatrixSpec:
    """
    One member of the tridiagonal families.

    s is only read for E_m(s), the trailing s×s block of C_m.
    """

    family: MatrixFamily
    m: int
    s: int | None = None

    @property
    def size(self) -> int:
        if self.family in (MatrixFamily.A, MatrixFamily.B, MatrixFamily.C):
            return self.m + 1
        if self.family in (MatrixFamily.B2, MatrixFamily.C2):
            return self.m
        if self.family in (MatrixFamily.B3, MatrixFamily.C3):
            return self.m - 1
        return self.s or 0


def fraction_str(x: Fraction | int | None) -> str | None:
    return None if x is None else str(Fraction(x))


@dataclass
class LemmaRecord:
    """Exact determinants and ratios for one m, with pass flags from exact comparisons."""

    m: int
    det_C: int
    det_B: Fraction
    det_C2: int | None
    det_C3: int | None
    eta: Fraction | None
    eta_candidates: tuple[Fraction, ...]
    delta_inv: Fraction
    delta_m: Fraction | None
    dense: bool
    flags: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.flags.values())

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "det_C": str(self.det_C),
            "det_B": fraction_str(self.det_B),
            "det_C2": fraction_str(self.det_C2),
            "det_C3": fraction_str(self.det_C3),
            "eta": fraction_str(self.eta),
            "eta_candidates": [fraction_str(x) for x in self.eta_candidates],
            "delta_inv": fraction_str(self.delta_inv),
            "delta_inv_float": float(self.delta_inv),
            "delta_m": fraction_str(self.delta_m),
            "dense": self.dense,
            "flags": dict(self.flags),
            "passed": self.passed,
        }


@dataclass
class LemmaReport:
    m_lo: int
    m_hi: int
    records: list[LemmaRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> list[tuple[int, str]]:
        return [(r.m, name) for r in self.records for name, ok in r.flags.items() if not ok]

    def summary(self) -> dict:
        counts: dict[str, int] = {}
        for r in self.records:
            for name, ok in r.flags.items():
                counts[name] = counts.get(name, 0) + (0 if ok else 1)
        return {
            "m_range": [self.m_lo, self.m_hi],
            "records": len(self.records),
            "failed_by_flag": counts,
            "passed": self.passed,
        }

    def to_dict(self) -> dict:
        return {"summary": self.summary(), "records": [r.to_dict() for r in self.records]}


@dataclass
class DominationReport:
    m_lo: int
    m_hi: int
    pairs_checked: int = 0
    violations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def row_passed(self, m: int) -> bool:
        """No k ≥ m+11 in range with F₁(k) > F₁(m)."""
        return all(lo != m for lo, _ in self.violations)


@dataclass
class TailBoundReport:
    m_lo: int
    m_hi: int
    bound: Fraction
    worst_m: int | None = None
    worst_value: float = 0.0
    violations: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class TableRow:
    m: int
    exact: Fraction
    printed: str
    gap: float
    passed: bool
    alternate: Fraction | None = None
