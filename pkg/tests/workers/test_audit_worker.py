"""Worker tests for the chunked lemma audit."""

from concurrent.futures import ThreadPoolExecutor

import pytest

from src.domains.lemmas.audit import nonsingularity_audit
from src.domains.lemmas.errors import InvalidRange
from src.workers.audit_worker import AuditWorker, AuditWorkerDependencies


class ReversingExecutor(ThreadPoolExecutor):
    """Hands chunk results back last-first, as an unlucky pool might."""

    def map(self, fn, *iterables, **kwargs):
        return reversed(list(super().map(fn, *iterables, **kwargs)))


def create_deps(workers: int = 2, chunk: int = 7, executor_factory=ThreadPoolExecutor) -> AuditWorkerDependencies:
    return AuditWorkerDependencies(workers=workers, chunk=chunk, dense_limit=20, executor_factory=executor_factory)


def test_chunks_cover_range():
    worker = AuditWorker(create_deps(chunk=4))
    assert worker.chunks(3, 12) == [[3, 4, 5, 6], [7, 8, 9, 10], [11, 12]]


def test_chunk_size_floor():
    worker = AuditWorker(create_deps(chunk=0))
    assert worker.chunks(1, 3) == [[1], [2], [3]]


def test_parallel_report_matches_sequential():
    parallel = AuditWorker(create_deps()).run(25)
    sequential = nonsingularity_audit(25, dense_limit=20)
    assert [r.to_dict() for r in parallel.records] == [r.to_dict() for r in sequential.records]
    assert parallel.passed


def test_records_merged_in_order():
    report = AuditWorker(create_deps(workers=3, chunk=5, executor_factory=ReversingExecutor)).run(30, m_lo=2)
    assert [r.m for r in report.records] == list(range(2, 31))


def test_single_worker_skips_executor():
    def refuse(_):
        raise AssertionError("executor should not be created")

    report = AuditWorker(create_deps(workers=1, executor_factory=refuse)).run(8)
    assert len(report.records) == 8


def test_invalid_range():
    with pytest.raises(InvalidRange):
        AuditWorker(create_deps()).run(5, m_lo=6)
