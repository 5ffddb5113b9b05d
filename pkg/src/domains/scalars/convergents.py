from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import mpmath

from src.domains.scalars.bigfloat import BigFloat
from src.domains.scalars.quadext import RADICAND, QuadExt

logger = logging.getLogger(__name__)


def sqrt17_convergents(q_max: int) -> list[tuple[int, int]]:
    """
    Continued-fraction convergents p/q of √17 with q ≤ q_max, by increasing q.

    Partial quotients come from the integer recurrence for quadratic surds
    (m, d, a) so no irrational value is ever approximated.
    """
    if q_max < 1:
        raise ValueError("q_max must be at least 1")

    a0 = math.isqrt(RADICAND)
    m, d, a = 0, 1, a0
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    out: list[tuple[int, int]] = []
    while q <= q_max:
        out.append((p, q))
        m = d * a - m
        d = (RADICAND - m * m) // d
        a = (a0 + m) // d
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return out


def liouville_margin(p: int, q: int) -> QuadExt:
    """17²·q²·(p − q√17)² − 4, positive exactly when |√17 − p/q| > 2/(17q²)."""
    diff = QuadExt(p, -q)
    return RADICAND * RADICAND * q * q * diff * diff - 4


@dataclass
class LiouvilleReport:
    convergents_checked: int = 0
    scanned_denominators: int = 0
    failures: list[tuple[int, int]] = field(default_factory=list)
    constant: BigFloat | None = None

    @property
    def passed(self) -> bool:
        return not self.failures


def liouville_check(q_max_convergents: int = 10**6, q_max_scan: int = 10**3, bits: int = 256) -> LiouvilleReport:
    """
    Verify the bound |√17 − p/q| > 2/(17q²) exactly.

    Every convergent with q ≤ q_max_convergents is tested, then every
    q ≤ q_max_scan with both nearest numerators ⌊q√17⌋ and ⌈q√17⌉; any
    other numerator is farther from q√17.
    """
    report = LiouvilleReport()
    for p, q in sqrt17_convergents(q_max_convergents):
        report.convergents_checked += 1
        if liouville_margin(p, q).sign() <= 0:
            report.failures.append((p, q))

    for q in range(1, q_max_scan + 1):
        lo = math.isqrt(RADICAND * q * q)
        report.scanned_denominators += 1
        for p in (lo, lo + 1):
            if liouville_margin(p, q).sign() <= 0:
                report.failures.append((p, q))

    with mpmath.workprec(bits):
        report.constant = BigFloat(mpmath.sqrt(17) + mpmath.sqrt(18), bits)

    if report.failures:
        logger.warning(f"Liouville bound failed for {len(report.failures)} fractions")
    return report
