import logging
from collections.abc import Callable
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field

from src.core.config.settings import settings
from src.domains.lemmas.audit import audit_range
from src.domains.lemmas.errors import InvalidRange
from src.domains.lemmas.models import LemmaReport
from src.infra.monitoring import timed

logger = logging.getLogger("audit_worker")


@dataclass
class AuditWorkerDependencies:
    """
    Everything the audit needs from outside; tests swap the executor for
    a thread pool.
    """

    workers: int = field(default_factory=lambda: settings.AUDIT_WORKERS)
    chunk: int = field(default_factory=lambda: settings.AUDIT_CHUNK)
    dense_limit: int = field(default_factory=lambda: settings.DENSE_DET_LIMIT)
    executor_factory: Callable[[int], Executor] = ProcessPoolExecutor


class AuditWorker:
    """
    Runs the per-m lemma audit over a range of m in chunks.

    Records are merged by m, so the report does not depend on worker count
    or completion order.
    """

    def __init__(self, deps: AuditWorkerDependencies):
        self.deps = deps

    def chunks(self, m_lo: int, m_hi: int) -> list[list[int]]:
        size = max(1, self.deps.chunk)
        return [list(range(start, min(start + size, m_hi + 1))) for start in range(m_lo, m_hi + 1, size)]

    def run(self, m_max: int, m_lo: int = 1) -> LemmaReport:
        if m_max < 1 or not 1 <= m_lo <= m_max:
            raise InvalidRange("m_max", m_max, "need 1 <= m_lo <= m_max")
        chunks = self.chunks(m_lo, m_max)
        logger.info(f"Auditing m={m_lo}..{m_max} in {len(chunks)} chunks on {self.deps.workers} workers")

        with timed("lemma_audit"):
            if self.deps.workers <= 1:
                parts = [audit_range(c, self.deps.dense_limit) for c in chunks]
            else:
                with self.deps.executor_factory(self.deps.workers) as pool:
                    parts = list(pool.map(audit_range, chunks, [self.deps.dense_limit] * len(chunks)))

        records = sorted((r for part in parts for r in part), key=lambda r: r.m)
        report = LemmaReport(m_lo, m_max, records)
        for m, flag in report.failures():
            logger.warning("lemmas.check_failed", extra={"m": m, "flag": flag})
        logger.info(f"Audit finished: {'pass' if report.passed else 'FAIL'}")
        return report
