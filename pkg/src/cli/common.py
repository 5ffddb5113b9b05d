import logging

import typer

from src.application.schemas import RunReport
from src.cli.exceptions import EXIT_CHECK_FAILED, EXIT_OK
from src.core.config.settings import settings
from src.infra.monitoring import export_metrics
from src.services.file_store import ReportStore

logger = logging.getLogger("cli")


def store() -> ReportStore:
    return ReportStore(settings.OUTPUT_DIR)


def finish(report: RunReport, out: str) -> None:
    """Write the report, export metrics and exit 0 iff every check passed."""
    path = store().write_json(out, report.to_payload())
    export_metrics(settings.METRICS_FILE)
    failed = [c.paper_check for c in report.checks if not c.passed]
    typer.echo(f"{len(report.checks) - len(failed)}/{len(report.checks)} checks passed; report written to {path}")
    for name in failed:
        typer.echo(f"  FAIL {name}", err=True)
    raise typer.Exit(EXIT_OK if not failed else EXIT_CHECK_FAILED)


def require(condition: bool, message: str) -> None:
    if not condition:
        raise typer.BadParameter(message)
