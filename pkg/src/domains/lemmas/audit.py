import logging
from fractions import Fraction

from src.core.config.settings import settings
from src.domains.lemmas.determinants import (
    delta_bound_holds,
    delta_inv,
    delta_m,
    dense_det,
    det_C,
    det_C2,
    det_C3,
    eta,
    eta_candidates,
    eta_from_delta,
)
from src.domains.lemmas.errors import InvalidRange
from src.domains.lemmas.models import BandMatrixSpec, LemmaRecord, LemmaReport, MatrixFamily

logger = logging.getLogger(__name__)

DELTA_BOUND_FROM = 30


def b3_excluded_value(m: int) -> Fraction:
    """−4/3·(m−3), the value of Δ(m)⁻¹ at which B_m(3) is singular."""
    return Fraction(-4, 3) * (m - 3)


def _dense_pair(b_family: MatrixFamily, c_family: MatrixFamily, m: int) -> tuple[int, int]:
    return dense_det(BandMatrixSpec(b_family, m)), dense_det(BandMatrixSpec(c_family, m))


def audit_m(m: int, dense_limit: int | None = None) -> LemmaRecord:
    """
    All exact checks for one m.

    Up to dense_limit the determinants of B_m, C_m and the restricted
    families are also computed densely and tied to the recurrence.
    """
    if m < 1:
        raise InvalidRange("m", m, "must be at least 1")
    dense_limit = settings.DENSE_DET_LIMIT if dense_limit is None else dense_limit
    dense = m <= dense_limit
    flags: dict[str, bool] = {}

    c = det_C(m)
    c2 = det_C2(m) if m >= 3 else None
    c3 = det_C3(m) if m >= 4 else None
    inv = delta_inv(m)

    if dense:
        b_dense, c_dense = _dense_pair(MatrixFamily.B, MatrixFamily.C, m)
        det_B = Fraction(b_dense)
        flags["det_B_is_quarter_det_C"] = 4 * b_dense == c_dense
        flags["det_C_matches_recurrence"] = c_dense == c
        if c2 is not None:
            b2, c2_dense = _dense_pair(MatrixFamily.B2, MatrixFamily.C2, m)
            flags["det_B2_is_quarter_det_C2"] = 4 * b2 == c2_dense == c2
        if c3 is not None:
            b3, c3_dense = _dense_pair(MatrixFamily.B3, MatrixFamily.C3, m)
            flags["det_B3_is_quarter_det_C3"] = 4 * b3 == c3_dense == c3
    else:
        det_B = Fraction(c, 4)

    flags["det_C_nonzero"] = c != 0
    flags["delta_inv_not_4"] = inv != 4
    if m >= 2:
        # at m=1, Δ(1)⁻¹ = 8/3 = −4/3·(1−3), outside the range of B_m(3)
        flags["delta_inv_not_b3_value"] = inv != b3_excluded_value(m)
        flags["eta_displays_agree"] = eta(m) == eta_from_delta(m)
    if c2 is not None:
        flags["B2_nonsingular"] = c2 != 0
        flags["B2_criterion"] = (c2 == 0) == (inv == 4)
    if c3 is not None:
        flags["B3_nonsingular"] = c3 != 0
        flags["B3_criterion"] = (c3 == 0) == (inv == b3_excluded_value(m))
    if m >= DELTA_BOUND_FROM:
        flags["delta_bound"] = delta_bound_holds(m)

    return LemmaRecord(
        m=m,
        det_C=c,
        det_B=det_B,
        det_C2=c2,
        det_C3=c3,
        eta=eta(m) if m >= 2 else None,
        eta_candidates=eta_candidates(m),
        delta_inv=inv,
        delta_m=None if m == 4 else delta_m(m),
        dense=dense,
        flags=flags,
    )


def audit_range(ms, dense_limit: int | None = None) -> list[LemmaRecord]:
    return [audit_m(m, dense_limit) for m in ms]


def nonsingularity_audit(m_max: int, dense_limit: int | None = None, m_lo: int = 1) -> LemmaReport:
    """Sequential audit of m_lo..m_max; AuditWorker runs the same records in parallel."""
    if m_max < 1 or not 1 <= m_lo <= m_max:
        raise InvalidRange("m_max", m_max, "need 1 <= m_lo <= m_max")
    report = LemmaReport(m_lo, m_max, audit_range(range(m_lo, m_max + 1), dense_limit))
    for m, flag in report.failures():
        logger.warning("lemmas.check_failed", extra={"m": m, "flag": flag})
    logger.info(f"Audited m={m_lo}..{m_max}: {'pass' if report.passed else 'FAIL'}")
    return report
