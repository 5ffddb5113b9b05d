import logging
from typing import Literal

from pydantic import BaseModel, Field

from src.core.config.settings import Settings, settings
from src.infra.monitoring import record_check

logger = logging.getLogger(__name__)


class RunConfig(BaseModel):
    """Effective configuration of one run, echoed into every output file."""

    command: str
    mode: str
    precision_bits: int
    trunc_weight: int
    seed: int
    tolerances: dict[str, float]
    output_dir: str
    options: dict[str, str | int | float | bool | None] = {}

    @classmethod
    def current(cls, command: str, source: Settings = settings, **options) -> "RunConfig":
        return cls(
            command=command,
            mode=source.MODE,
            precision_bits=source.PRECISION_BITS,
            trunc_weight=source.TRUNC_WEIGHT,
            seed=source.SEED,
            tolerances={
                "residual": source.RESIDUAL_TOL,
                "reality": source.REALITY_TOL,
                "sample": source.SAMPLE_TOL,
                "table": source.TABLE_TOL,
                "singularity": source.SINGULARITY_TOL,
            },
            output_dir=source.OUTPUT_DIR,
            options=options,
        )


class CheckEntry(BaseModel):
    paper_check: str
    status: Literal["pass", "fail"]
    tolerance: float | str | None = None
    detail: dict = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class RunReport(BaseModel):
    config: RunConfig
    checks: list[CheckEntry] = Field(default_factory=list)
    result: dict = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, passed: bool, tolerance: float | str | None = None, **detail) -> bool:
        """Append a check entry and count it in the metrics."""
        self.checks.append(
            CheckEntry(paper_check=name, status="pass" if passed else "fail", tolerance=tolerance, detail=detail)
        )
        record_check(name, passed)
        if not passed:
            logger.warning("check.failed", extra={"check": name})
        return passed

    def to_payload(self) -> dict:
        return self.model_dump(mode="json")
