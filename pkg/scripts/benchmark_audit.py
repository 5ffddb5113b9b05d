#!/usr/bin/env python3
"""
Benchmark script for the lemma audit.

Measures:
- Wall time of the exact audit for growing m_max
- Speedup of the chunked worker over the inline run
- Cost of the dense determinant cross-check
"""

import statistics
import sys
import time

from src.domains.lemmas.audit import nonsingularity_audit
from src.domains.lemmas.determinants import det_E_column
from src.workers.audit_worker import AuditWorker, AuditWorkerDependencies


def time_runs(fn, repeats: int = 3) -> dict:
    timings = []
    for _ in range(repeats):
        det_E_column.cache_clear()
        start = time.perf_counter()
        fn()
        timings.append(time.perf_counter() - start)
    return {"median": statistics.median(timings), "max": max(timings)}


def benchmark_inline(m_values: list[int]) -> None:
    print("Inline audit (dense limit 0):")
    for m_max in m_values:
        stats = time_runs(lambda: nonsingularity_audit(m_max, dense_limit=0))
        print(f"  m_max={m_max:>4}: median {stats['median']:.3f}s, max {stats['max']:.3f}s")


def benchmark_workers(m_max: int, worker_counts: list[int]) -> None:
    print(f"Chunked audit to m_max={m_max}:")
    baseline = None
    for workers in worker_counts:
        worker = AuditWorker(AuditWorkerDependencies(workers=workers, chunk=50, dense_limit=0))
        stats = time_runs(lambda: worker.run(m_max), repeats=1)
        baseline = baseline or stats["median"]
        print(f"  workers={workers}: {stats['median']:.3f}s (speedup {baseline / stats['median']:.2f}x)")


def benchmark_dense(m_max: int) -> None:
    print(f"Dense cross-check to m_max={m_max}:")
    exact = time_runs(lambda: nonsingularity_audit(m_max, dense_limit=0), repeats=1)["median"]
    dense = time_runs(lambda: nonsingularity_audit(m_max, dense_limit=m_max), repeats=1)["median"]
    print(f"  recurrence only {exact:.3f}s, with dense determinants {dense:.3f}s")


def main() -> int:
    print("=" * 60)
    print("LEMMA AUDIT BENCHMARK")
    print("=" * 60)
    benchmark_inline([100, 200, 400, 800])
    benchmark_workers(800, [1, 2, 4])
    benchmark_dense(60)
    return 0


if __name__ == "__main__":
    sys.exit(main())
