from collections.abc import Sequence
from fractions import Fraction

from src.domains.series.errors import InvalidTrace
from src.domains.series.models import DecomposeMode
from src.domains.series.series import DefiningSeries, Series


def ring_ops(x: Series, y: Series, op: str) -> Series:
    """Graded ring operation; the result is truncated at the smaller trunc."""
    if op == "+":
        return x + y
    if op in ("-", "−"):
        return x - y
    if op in ("*", "×"):
        return x.mul(y)
    raise ValueError(f"Unknown ring operation {op!r}")


def laplacian(F: Series, order: int = 1) -> Series:
    if order < 1:
        raise ValueError("order must be at least 1")
    return F.laplacian(order)


def trace_op(F: Series, s: int, t: int) -> Series:
    """(1/st)·ΔF for F of pure type (s, t), in the frame where F₁₁ = ⟨z,z⟩."""
    if s < 1 or t < 1:
        raise InvalidTrace(s, t, "s and t must be positive")
    stray = [m for m in F.terms if m.type != (s, t)]
    if stray:
        raise InvalidTrace(s, t, f"series contains a term of type {stray[0].type}")
    return F.laplacian().scale(Fraction(1, s * t))


def decompose(F: Series, mode: DecomposeMode = DecomposeMode.BY_WEIGHT) -> dict:
    return F.decompose(mode)


def eval_series(F: DefiningSeries, z: Sequence[complex], u: float) -> float:
    return F.value(z, u)


def min_type_at_least(F: Series, k: int) -> Series:
    """Terms of type (s, t) with min(s, t) ≥ k."""
    return F.filter(lambda m: min(m.type) >= k)
