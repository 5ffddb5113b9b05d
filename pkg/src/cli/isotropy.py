import typer

from src.application.isotropy.service import IsotropyService
from src.cli.common import finish, require
from src.cli.exceptions import handle_errors
from src.cli.normalize import load_defining, load_element
from src.domains.scalars.gaussian import CoefficientMode
from src.domains.series.models import Signature

app = typer.Typer(help="Isotropy groups of nonspherical normal forms.")


@app.command("rank")
@handle_errors
def rank_command(
    n: int = typer.Option(1, "--n", help="Dimension."),
    e: int | None = typer.Option(None, "--e", help="Number of plus signs; n by default."),
    l: int = typer.Option(4, "--l", help="Weight of the lowest nonspherical component."),
    samples: int = typer.Option(50, help="Random normal forms to test."),
    out: str = typer.Option("isotropy_rank.json", help="Report file."),
):
    """Injectivity of a ↦ H_{l+1}(z, u; a) on random normal forms."""
    require(l >= 4, "--l must be at least 4")
    require(samples >= 1, "--samples must be at least 1")
    finish(IsotropyService().rank(Signature(n, n if e is None else e), l, samples), out)


@app.command("extract")
@handle_errors
def extract_command(
    series: str = typer.Argument(..., help="Nonspherical normal form."),
    element: str = typer.Argument(..., help="Group element whose U is used."),
    target: str | None = typer.Option(None, help="Image normal form; the series itself by default."),
    literal: bool = typer.Option(False, "--literal", help="Use the a(U) and r(U) formulas exactly as printed."),
    out: str = typer.Option("isotropy_extract.json", help="Report file."),
):
    """ρ, a and r of an isotropy element from its unitary part U."""
    F = load_defining(series)
    sigma = load_element(element)
    require(sigma.sig == F.sig, f"element has signature {sigma.sig}, the series {F.sig}")
    T = load_defining(target) if target else None
    report = IsotropyService().extract(F, sigma.to_mode(CoefficientMode.FLOAT).U, T, literal)
    for key in ("rho", "r"):
        typer.echo(f"{key} = {report.result[key]:.12g}")
    finish(report, out)
