import logging

import click
import typer

from src.cli import group, isotropy, lemmas
from src.cli.chains import chain_command, mv_app
from src.cli.exceptions import EXIT_USAGE
from src.cli.normalize import normalize_command
from src.core.config.settings import settings
from src.domains.scalars.gaussian import CoefficientMode

app = typer.Typer(help=f"{settings.PROJECT_NAME}: normal forms, chains and matrix lemmas of real hypersurfaces.")

app.command("normalize")(normalize_command)
app.command("chain")(chain_command)
app.add_typer(mv_app, name="mv")
app.add_typer(group.app, name="group")
app.add_typer(isotropy.app, name="isotropy")
app.add_typer(lemmas.app, name="lemmas")


@app.callback()
def configure(
    mode: CoefficientMode = typer.Option(CoefficientMode(settings.MODE), help="Coefficient arithmetic."),
    bits: int = typer.Option(settings.PRECISION_BITS, help="Working precision for big-float checks."),
    weight: int = typer.Option(settings.TRUNC_WEIGHT, help="Default truncation weight."),
    seed: int = typer.Option(settings.SEED, help="Seed of every random sample."),
    out_dir: str = typer.Option(settings.OUTPUT_DIR, help="Directory for reports."),
    metrics_file: str | None = typer.Option(settings.METRICS_FILE, help="Prometheus text file to write after each run."),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at INFO level."),
):
    """Global options shared by every command."""
    if bits < 53:
        raise typer.BadParameter("--bits must be at least 53")
    if weight < 2:
        raise typer.BadParameter("--weight must be at least 2")
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    settings.MODE = mode.value
    settings.PRECISION_BITS = bits
    settings.TRUNC_WEIGHT = weight
    settings.SEED = seed
    settings.OUTPUT_DIR = out_dir
    settings.METRICS_FILE = metrics_file


def main(argv: list[str] | None = None) -> int:
    """Run the CLI and return its exit code."""
    try:
        result = app(args=argv, standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.exceptions.Abort:
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    return result if isinstance(result, int) else 0
