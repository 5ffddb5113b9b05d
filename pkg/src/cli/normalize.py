import typer

from src.application.normalization.service import NormalizationService
from src.cli.common import finish, require
from src.cli.exceptions import handle_errors
from src.core.config.settings import settings
from src.domains.group.models import GroupElement
from src.domains.group.schemas import GroupFile, schema_to_element
from src.domains.normalization.models import NormalFormType
from src.domains.scalars.codec import parse_real
from src.domains.series.schemas import SeriesFile, schema_to_defining
from src.domains.series.series import DefiningSeries
from src.services.file_store import ReportStore


def load_defining(path: str) -> DefiningSeries:
    return schema_to_defining(ReportStore.read_model(path, SeriesFile))


def truncated(F: DefiningSeries, weight: int) -> DefiningSeries:
    require(weight <= F.trunc, f"weight {weight} exceeds the file's trunc_weight {F.trunc}")
    return F if weight == F.trunc else DefiningSeries.from_series(F.with_trunc(weight))


def load_element(path: str) -> GroupElement:
    return schema_to_element(ReportStore.read_model(path, GroupFile))


@handle_errors
def normalize_command(
    series: str = typer.Argument(..., help="Defining series JSON."),
    sigma: str | None = typer.Option(None, help="Group element JSON; identity when omitted."),
    alpha: str = typer.Option("0", help="Normal form type alpha."),
    beta: str = typer.Option("0", help="Normal form type beta."),
    weight: int | None = typer.Option(None, help="Normalize through this weight; the global --weight otherwise."),
    check_only: bool = typer.Option(False, "--check-only", help="Only test the normal-form conditions."),
    out: str = typer.Option("normalize.json", help="Report file."),
):
    """Normalize a defining series with a given initial value."""
    F = load_defining(series)
    F = truncated(F, weight if weight is not None else min(settings.TRUNC_WEIGHT, F.trunc))
    target = NormalFormType(parse_real(alpha, F.mode), parse_real(beta, F.mode))
    service = NormalizationService(tol=settings.RESIDUAL_TOL)
    if check_only:
        finish(service.check_normal_form(F, target), out)
    element = load_element(sigma).to_mode(F.mode) if sigma else GroupElement.identity(F.sig, F.mode)
    require(element.sig == F.sig, f"sigma has signature {element.sig}, the series {F.sig}")
    report, _ = service.run(F, element, target)
    finish(report, out)
