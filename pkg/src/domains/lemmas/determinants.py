"""
Exact determinants of the trailing blocks E_m(s) by the three-term recurrence

    det E_m(s+1) = (2m+4−3s)·det E_m(s) − 2s(m−s+1)·det E_m(s−1),

with det E_m(0) = 1 and det E_m(1) = 2m+4, and the ratios built from them.
"""

from fractions import Fraction
from functools import lru_cache

from src.domains.lemmas.errors import InvalidRange, UndefinedAtFour
from src.domains.lemmas.matrices import build
from src.domains.lemmas.models import BandMatrixSpec, MatrixFamily
from src.services.linear_solve import integer_det


def _check_m(m: int) -> None:
    if m < 1:
        raise InvalidRange("m", m, "must be at least 1")


@lru_cache(maxsize=2048)
def det_E_column(m: int) -> tuple[int, ...]:
    """(det E_m(0), det E_m(1), …, det E_m(m+1))."""
    _check_m(m)
    dets = [1, 2 * m + 4]
    for s in range(1, m + 1):
        dets.append((2 * m + 4 - 3 * s) * dets[s] - 2 * s * (m - s + 1) * dets[s - 1])
    return tuple(dets)


def det_E(m: int, s: int) -> int:
    _check_m(m)
    if not 1 <= s <= m + 1:
        raise InvalidRange("s", s, f"need 1 <= s <= {m + 1}")
    return det_E_column(m)[s]


def det_C(m: int) -> int:
    return det_E(m, m + 1)


def det_C2(m: int) -> int:
    """det C_m(2) = det E_m(m) + 2·det E_m(m−1), for m ≥ 3."""
    if m < 3:
        raise InvalidRange("m", m, "C_m(2) is defined for m >= 3")
    col = det_E_column(m)
    return col[m] + 2 * col[m - 1]


def det_C3(m: int) -> int:
    """det C_m(3) = det E_m(m−1) + 4·det E_m(m−2), for m ≥ 4."""
    if m < 4:
        raise InvalidRange("m", m, "C_m(3) is defined for m >= 4")
    col = det_E_column(m)
    return col[m - 1] + 4 * col[m - 2]


def dense_det(spec: BandMatrixSpec) -> int:
    return integer_det(build(spec))


def delta_inv(m: int) -> Fraction:
    """Δ(m)⁻¹ = det E_m(m+1)/det E_m(m)."""
    col = det_E_column(m)
    assert col[m] != 0, f"det E_{m}({m}) vanished"
    return Fraction(col[m + 1], col[m])


def delta_m(m: int) -> Fraction:
    """δ_m = 1 − Δ(m)⁻¹/(4−m)."""
    if m == 4:
        raise UndefinedAtFour()
    return 1 - delta_inv(m) / (4 - m)


def eta(m: int) -> Fraction:
    """η(m) = det E_m(m)/det E_m(m−1), for m ≥ 2."""
    if m < 2:
        raise InvalidRange("m", m, "eta uses E_m(m-1), which is empty for m=1; see eta_candidates")
    col = det_E_column(m)
    assert col[m - 1] != 0, f"det E_{m}({m - 1}) vanished"
    return Fraction(col[m], col[m - 1])


def eta_from_delta(m: int) -> Fraction:
    """The same ratio through η(m) = 2m/(4 − m − Δ(m)⁻¹)."""
    den = 4 - m - delta_inv(m)
    assert den != 0, f"4 - m - Delta(m)^-1 vanished at m={m}"
    return Fraction(2 * m) / den


def eta_candidates(m: int) -> tuple[Fraction, ...]:
    """
    For m = 1 both readings of the first table entry: det E_1(1)/det E_1(0) = 6
    and det E_1(2)/det E_1(1) = 8/3. Other m have the single value η(m).
    """
    if m == 1:
        col = det_E_column(1)
        return Fraction(col[1], col[0]), Fraction(col[2], col[1])
    return (eta(m),)


def delta_bound_holds(m: int, bound: Fraction = Fraction(1, 5)) -> bool:
    """|δ_m| ≤ bound, decided as |Δ(m)⁻¹ − (4−m)| ≤ bound·|4−m| over the rationals."""
    return abs(delta_inv(m) - (4 - m)) <= bound * abs(4 - m)
