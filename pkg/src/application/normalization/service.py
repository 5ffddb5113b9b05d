import logging

from src.application.schemas import RunConfig, RunReport
from src.domains.group.models import GroupElement
from src.domains.group.schemas import element_to_schema
from src.domains.normalization.group_law import normalization_group_law
from src.domains.normalization.models import NormalFormType, NormalizationResult
from src.domains.normalization.predicate import is_normal_form
from src.domains.normalization.solver import normalize
from src.domains.scalars.codec import format_real
from src.domains.scalars.gaussian import CoefficientMode
from src.domains.series.schemas import map_to_schema, series_to_schema
from src.domains.series.series import DefiningSeries
from src.infra.monitoring import observe_stage, timed

logger = logging.getLogger("normalization_service")


def _stage_observer(weight: int, seconds: float) -> None:
    observe_stage(f"normalize_weight_{weight}", seconds)


def result_to_payload(result: NormalizationResult) -> dict:
    mode = result.output.mode
    return {
        "sigma": element_to_schema(result.sigma).model_dump(mode="json"),
        "high": map_to_schema(result.high).model_dump(mode="json"),
        "output": series_to_schema(result.output).model_dump(mode="json"),
        "residuals": {str(w): r for w, r in sorted(result.residuals.items())},
        "target": {"alpha": format_real(result.target.alpha, mode), "beta": format_real(result.target.beta, mode)},
    }


class NormalizationService:
    def __init__(self, tol: float = 1e-10):
        self.tol = tol

    def _limit(self, F: DefiningSeries) -> float:
        return 0.0 if F.mode == CoefficientMode.EXACT else self.tol

    def run(self, F: DefiningSeries, sigma: GroupElement, target: NormalFormType = NormalFormType()) -> tuple[RunReport, NormalizationResult]:
        report = RunReport(
            config=RunConfig.current(
                "normalize",
                trunc=F.trunc,
                n=F.sig.n,
                e=F.sig.e,
                alpha=str(target.alpha),
                beta=str(target.beta),
            )
        )
        with timed("normalize"):
            result = normalize(F, sigma, target, observer=_stage_observer)

        limit = self._limit(F)
        worst = max(result.residuals.values(), default=0.0)
        report.check("normal_form_residuals", worst <= limit, tolerance=limit, worst=worst)
        report.result = result_to_payload(result)
        logger.info(f"Normalized through weight {F.trunc}; worst residual {worst:.3e}")
        return report, result

    def check_normal_form(self, F: DefiningSeries, target: NormalFormType = NormalFormType()) -> RunReport:
        report = RunReport(config=RunConfig.current("normalize check", trunc=F.trunc))
        ok, defects = is_normal_form(F, target, self.tol)
        report.check("is_normal_form", ok, tolerance=self._limit(F), defects=len(defects.defects))
        report.result = {"defects": [entry._asdict() for entry in defects.defects]}
        return report

    def group_law(self, F: DefiningSeries, s1: GroupElement, s2: GroupElement, target: NormalFormType = NormalFormType()) -> RunReport:
        report = RunReport(config=RunConfig.current("normalize group-law", trunc=F.trunc))
        with timed("normalization_group_law"):
            ok = normalization_group_law(F, s1, s2, target, tol=1e-9)
        report.check("normalization_group_law", ok, tolerance=0.0 if F.mode == CoefficientMode.EXACT else 1e-9)
        return report
