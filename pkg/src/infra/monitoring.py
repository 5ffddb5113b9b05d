import logging
from collections.abc import Iterator
from contextlib import contextmanager

from prometheus_client import REGISTRY, Counter, Histogram, write_to_textfile

logger = logging.getLogger(__name__)

CHECKS_EVALUATED = Counter(
    "lab_checks_total", "Verification checks evaluated, by outcome", ["check", "status"]
)

STAGE_SECONDS = Histogram(
    "lab_stage_seconds",
    "Wall time per computation stage",
    ["stage"],
    buckets=(0.001, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 30.0, 120.0),
)


def record_check(check: str, passed: bool) -> None:
    CHECKS_EVALUATED.labels(check=check, status="pass" if passed else "fail").inc()


def observe_stage(stage: str, seconds: float) -> None:
    STAGE_SECONDS.labels(stage=stage).observe(seconds)


@contextmanager
def timed(stage: str) -> Iterator[None]:
    with STAGE_SECONDS.labels(stage=stage).time():
        yield


def export_metrics(path: str | None) -> None:
    """Write the default registry in text exposition format; no-op without a path."""
    if not path:
        return
    try:
        write_to_textfile(path, REGISTRY)
    except OSError as e:
        # metrics are auxiliary; the run result stands
        logger.warning(f"Could not write metrics to {path}: {e}")
