import logging
from fractions import Fraction

from src.application.schemas import RunConfig, RunReport
from src.core.config.settings import settings
from src.domains.lemmas.bounds import (
    F1,
    F2,
    binomial_weight_sum,
    delta_sum,
    delta_sum_exact,
    f1_domination_check,
    f1_ratio,
    f1_tail_bound,
)
from src.domains.lemmas.determinants import delta_inv, det_C
from src.domains.lemmas.models import LemmaReport
from src.domains.lemmas.spectra import c_eigenvalue_product, eigenvalue_gap
from src.domains.lemmas.tables import eta_table, format_table
from src.domains.scalars.convergents import liouville_check
from src.infra.monitoring import timed
from src.workers.audit_worker import AuditWorker, AuditWorkerDependencies

logger = logging.getLogger("lemma_service")

# printed constants and the digits they carry
PRINTED_F1 = {100: "2114.7", 200: "1.5207"}
PRINTED_F2 = {400: "0.2247", 600: "0.1815", 800: "0.1564"}
CONSTANT_RTOL = 1e-3
EIGEN_RTOL = 1e-8


class LemmaService:
    """Builds the lemma reports the CLI writes out."""

    def __init__(self, worker: AuditWorker | None = None, bits: int = 256):
        self.worker = worker or AuditWorker(AuditWorkerDependencies())
        self.bits = bits

    def table(self) -> tuple[RunReport, str]:
        report = RunReport(config=RunConfig.current("lemmas eta-table"))
        with timed("eta_table"):
            rows = eta_table()
        for row in rows:
            report.check(
                f"eta_table_m{row.m}",
                row.passed,
                tolerance=settings.TABLE_TOL,
                exact=str(row.exact),
                printed=row.printed,
                gap=row.gap,
            )
        report.result = {
            "rows": [
                {
                    "m": row.m,
                    "exact": str(row.exact),
                    "float": float(row.exact),
                    "printed": row.printed,
                    "alternate": None if row.alternate is None else str(row.alternate),
                }
                for row in rows
            ],
            "note": "m=1 prints det E_1(2)/det E_1(1) = 8/3; det E_1(1)/det E_1(0) = 6 is the alternate",
        }
        return report, format_table(rows)

    def audit(self, m_max: int, m_lo: int = 1, sum_check_max: int = 100) -> tuple[RunReport, LemmaReport]:
        """Exact audit of m_lo..m_max plus the binomial-sum identity for m ≤ sum_check_max."""
        report = RunReport(config=RunConfig.current("lemmas audit", m_max=m_max, bits=self.bits))
        audit = self.worker.run(m_max, m_lo)
        for name, failed in audit.summary()["failed_by_flag"].items():
            report.check(name, failed == 0, tolerance="exact", failures=failed)

        upper = min(m_max, sum_check_max)
        with timed("delta_sum_exact"):
            mismatched = [m for m in range(m_lo, upper + 1) if 1 / delta_sum_exact(m) != delta_inv(m)]
        if upper >= m_lo:
            report.check("delta_sum_matches_recurrence", not mismatched, tolerance="exact", mismatched=mismatched)
            report.check("binomial_weights_sum_to_one", binomial_weight_sum(upper) == 1, tolerance="exact")

        report.result = audit.to_dict()
        return report, audit

    def precision_cross_check(self, m_max: int = 200) -> RunReport:
        """|Δ(m)⁻¹ − 1/delta_sum(m)| ≤ 2^(40−bits)·|Δ(m)⁻¹| for m ≤ m_max."""
        report = RunReport(config=RunConfig.current("lemmas precision", m_max=m_max, bits=self.bits))
        limit = Fraction(1, 2 ** (self.bits - 40))
        worst = []
        for m in range(1, m_max + 1):
            exact = delta_inv(m)
            if abs(1 / delta_sum(m, self.bits) - exact) > limit * abs(exact):
                worst.append(m)
        report.check("delta_sum_precision", not worst, tolerance=f"2^-{self.bits - 40} relative", failing=worst)
        return report

    def eigen(self, m_max: int = 100, product_max: int = 30) -> RunReport:
        report = RunReport(config=RunConfig.current("lemmas eigen", m_max=m_max))
        gaps = {m: eigenvalue_gap(m) for m in range(1, m_max + 1)}
        worst = max(gaps, key=gaps.get)
        report.check("eigenvalues_of_A", gaps[worst] <= EIGEN_RTOL, tolerance=EIGEN_RTOL, worst_m=worst, gap=gaps[worst])

        bad = []
        for m in range(1, min(m_max, product_max) + 1):
            det = det_C(m)
            if abs(c_eigenvalue_product(m) - float(det)) > 1e-6 * abs(float(det)):
                bad.append(m)
        report.check("eigenvalue_product_is_det_C", not bad, tolerance=1e-6, failing=bad)
        report.result = {"gaps": {str(m): g for m, g in gaps.items()}}
        return report

    def constants(self) -> RunReport:
        report = RunReport(config=RunConfig.current("lemmas constants", bits=self.bits))
        values = {}
        for m, printed in PRINTED_F1.items():
            value = float(F1(m, self.bits))
            values[f"F1({m})"] = value
            report.check(f"F1_{m}", _matches(value, printed), tolerance=CONSTANT_RTOL, value=value, printed=printed)
        for m, printed in PRINTED_F2.items():
            value = float(F2(m, self.bits))
            values[f"F2({m})"] = value
            report.check(f"F2_{m}", _matches(value, printed), tolerance=CONSTANT_RTOL, value=value, printed=printed)

        tail = f1_tail_bound(bits=self.bits)
        report.check(
            "F1_tail_bound",
            tail.passed,
            tolerance=str(tail.bound),
            worst_m=tail.worst_m,
            worst_value=tail.worst_value,
        )
        ratio_gaps = []
        for m in range(100, 121):
            formula, direct = f1_ratio(m, self.bits)
            ratio_gaps.append(abs(float(formula) / float(direct) - 1))
        report.check("F1_ratio_branches", max(ratio_gaps) <= 1e-12, tolerance=1e-12)
        report.result = {"values": values}
        return report

    def domination(self, m_lo: int, m_hi: int) -> RunReport:
        report = RunReport(config=RunConfig.current("lemmas domination", m_lo=m_lo, m_hi=m_hi, bits=self.bits))
        with timed("f1_domination"):
            result = f1_domination_check(m_lo, m_hi, self.bits)
        report.check(
            "F1_domination",
            result.passed,
            tolerance="exact comparison at working precision",
            pairs=result.pairs_checked,
            violations=len(result.violations),
        )
        report.check(
            f"F1_domination_m{m_lo}",
            result.row_passed(m_lo),
            tolerance="exact comparison at working precision",
        )
        report.result = {"pairs_checked": result.pairs_checked, "violations": result.violations[:50]}
        return report

    def liouville(self, q_max_convergents: int = 10**6, q_max_scan: int = 10**3) -> RunReport:
        report = RunReport(
            config=RunConfig.current(
                "lemmas liouville", q_max_convergents=q_max_convergents, q_max_scan=q_max_scan
            )
        )
        result = liouville_check(q_max_convergents, q_max_scan, self.bits)
        report.check(
            "liouville_bound_sqrt17",
            result.passed,
            tolerance="exact",
            convergents=result.convergents_checked,
            scanned=result.scanned_denominators,
        )
        report.result = {
            "convergents_checked": result.convergents_checked,
            "scanned_denominators": result.scanned_denominators,
            "failures": result.failures,
            "constant": result.constant.digits(30) if result.constant else None,
        }
        return report


def _matches(value: float, printed: str) -> bool:
    return abs(value - float(printed)) <= CONSTANT_RTOL * abs(float(printed))
