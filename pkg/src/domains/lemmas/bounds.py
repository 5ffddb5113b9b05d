"""
The binomial sum Δ(m), its exact and high-precision evaluations, and the
tail functions F₁, F₂ bounding δ_m for large m.

With λ₁,₂ = (3 ∓ √17)/2 the binomial weights are p = λ₂/(λ₂−λ₁) and
q = −λ₁/(λ₂−λ₁), so p + q = 1, and the k-th denominator of Δ(m) is
kλ₁ + (m−k)λ₂ − (m−4) = (m+8)/2 + (m−2k)√17/2.
"""

import logging
import math
from fractions import Fraction

import mpmath

from src.core.config.settings import settings
from src.domains.lemmas.errors import F2DomainError, InvalidRange
from src.domains.lemmas.models import DominationReport, TailBoundReport
from src.domains.scalars.bigfloat import BigFloat
from src.domains.scalars.quadext import QuadExt

logger = logging.getLogger(__name__)

EXACT_SUM_M_MAX = 200
DOMINATION_GAP = 11
TAIL_BOUND = Fraction(533, 10**6)

P_WEIGHT = QuadExt(Fraction(1, 2), Fraction(3, 34))
Q_WEIGHT = QuadExt(Fraction(1, 2), Fraction(-3, 34))


def _check_m(m: int) -> None:
    if m < 1:
        raise InvalidRange("m", m, "must be at least 1")


def _guard(bits: int) -> int:
    return bits + max(64, bits // 4)


def _weights(prec: int) -> tuple[mpmath.mpf, mpmath.mpf, mpmath.mpf]:
    with mpmath.workprec(prec):
        root = mpmath.sqrt(17)
        return root, (17 + 3 * root) / 34, (17 - 3 * root) / 34


def seven_tenths(m: int) -> int:
    """[0.7m], the integer part of 7m/10."""
    return 7 * m // 10


def delta_sum_exact(m: int) -> QuadExt:
    """Δ(m) in Q(√17)."""
    _check_m(m)
    if m > EXACT_SUM_M_MAX:
        raise InvalidRange("m", m, f"exact binomial sums are evaluated for m <= {EXACT_SUM_M_MAX}")
    total = QuadExt(0)
    p_pow = [QuadExt(1)]
    q_pow = [QuadExt(1)]
    for _ in range(m):
        p_pow.append(p_pow[-1] * P_WEIGHT)
        q_pow.append(q_pow[-1] * Q_WEIGHT)
    for k in range(m + 1):
        den = QuadExt(Fraction(m + 8, 2), Fraction(m - 2 * k, 2))
        total = total + math.comb(m, k) * p_pow[k] * q_pow[m - k] / den
    return total


def binomial_weight_sum(m: int) -> QuadExt:
    """Σ binom(m,k) p^k q^(m−k), exactly 1."""
    _check_m(m)
    return sum((math.comb(m, k) * P_WEIGHT**k * Q_WEIGHT ** (m - k) for k in range(m + 1)), QuadExt(0))


def delta_sum(m: int, bits: int | None = None) -> BigFloat:
    """Δ(m) rounded to `bits`, summed with guard bits."""
    _check_m(m)
    bits = bits or settings.PRECISION_BITS
    prec = _guard(bits)
    root, p, q = _weights(prec)
    with mpmath.workprec(prec):
        total = mpmath.mpf(0)
        for k in range(m + 1):
            den = (m + 8 + (m - 2 * k) * root) / 2
            total += math.comb(m, k) * p**k * q ** (m - k) / den
    return BigFloat.of(total, bits)


def F1(m: int, bits: int | None = None) -> BigFloat:
    """192m³·binom(m,[0.7m])·p^[0.7m]·q^(m−[0.7m])."""
    _check_m(m)
    bits = bits or settings.PRECISION_BITS
    prec = _guard(bits)
    k = seven_tenths(m)
    _, p, q = _weights(prec)
    with mpmath.workprec(prec):
        value = 192 * mpmath.mpf(m) ** 3 * math.comb(m, k) * p**k * q ** (m - k)
    return BigFloat.of(value, bits)


def F2_defined(m: int) -> bool:
    """1/5 > (m+8)/(2m√17), i.e. 68m² > 25(m+8)² with both sides positive."""
    return m >= 1 and 68 * m * m > 25 * (m + 8) ** 2


def F2(m: int, bits: int | None = None) -> BigFloat:
    """(1/5 − (m+8)/(2m√17))⁻¹·√(2/(17m))."""
    if not F2_defined(m):
        raise F2DomainError(m)
    bits = bits or settings.PRECISION_BITS
    prec = _guard(bits)
    with mpmath.workprec(prec):
        root = mpmath.sqrt(17)
        value = mpmath.sqrt(mpmath.mpf(2) / (17 * m)) / (mpmath.mpf(1) / 5 - mpmath.mpf(m + 8) / (2 * m * root))
    return BigFloat.of(value, bits)


def f1_ratio(m: int, bits: int | None = None) -> tuple[BigFloat, BigFloat]:
    """
    F₁(m+1)/F₁(m) by its closed branch formula, next to the direct quotient.

    When [0.7(m+1)] ≠ [0.7m] the ratio is p(1+1/m)³(m+1)/([0.7m]+1),
    otherwise q(1+1/m)³(m+1)/(m−[0.7m]+1).
    """
    _check_m(m)
    bits = bits or settings.PRECISION_BITS
    prec = _guard(bits)
    k = seven_tenths(m)
    _, p, q = _weights(prec)
    with mpmath.workprec(prec):
        growth = (1 + mpmath.mpf(1) / m) ** 3 * (m + 1)
        if seven_tenths(m + 1) != k:
            formula = p * growth / (k + 1)
        else:
            formula = q * growth / (m - k + 1)
    direct = F1(m + 1, bits) / F1(m, bits)
    return BigFloat.of(formula, bits), direct


def f1_domination_check(m_lo: int, m_hi: int, bits: int = 256) -> DominationReport:
    """
    F₁(k) ≤ F₁(m) for every m_lo ≤ m < m_hi and m+11 ≤ k ≤ m_hi.

    Each m is compared against the running maximum of F₁ over its k-range.
    The inequality does not hold for every pair: (107, 120) and (117, 130)
    are violations, and every violating pair is listed in the report.
    """
    if not 100 <= m_lo < m_hi <= 2000:
        raise InvalidRange("m range", (m_lo, m_hi), "need 100 <= m_lo < m_hi <= 2000")
    values = {m: F1(m, bits) for m in range(m_lo, m_hi + 1)}
    report = DominationReport(m_lo, m_hi)

    suffix_max: dict[int, int] = {}
    best = None
    for k in range(m_hi, m_lo - 1, -1):
        if best is None or values[k] > values[best]:
            best = k
        suffix_max[k] = best

    for m in range(m_lo, m_hi):
        first = m + DOMINATION_GAP
        if first > m_hi:
            break
        report.pairs_checked += m_hi - first + 1
        worst = suffix_max[first]
        if values[worst] > values[m]:
            for k in range(first, m_hi + 1):
                if values[k] > values[m]:
                    report.violations.append((m, k))

    if report.violations:
        logger.warning("lemmas.f1_domination_failed", extra={"violations": len(report.violations), "first": report.violations[0]})
    return report


def f1_tail_bound(m_lo: int = 400, m_hi: int = 1000, bound: Fraction = TAIL_BOUND, bits: int = 256) -> TailBoundReport:
    """F₁(m) ≤ bound for every m_lo ≤ m ≤ m_hi."""
    if not 1 <= m_lo <= m_hi:
        raise InvalidRange("m range", (m_lo, m_hi), "need 1 <= m_lo <= m_hi")
    report = TailBoundReport(m_lo, m_hi, Fraction(bound))
    for m in range(m_lo, m_hi + 1):
        value = F1(m, bits)
        if report.worst_m is None or float(value) > report.worst_value:
            report.worst_m, report.worst_value = m, float(value)
        if value > report.bound:
            report.violations.append(m)
    return report
