import typer

from src.application.chains.service import ChainService
from src.cli.common import finish, require, store
from src.cli.exceptions import handle_errors
from src.core.config.settings import settings
from src.domains.scalars.codec import parse_real
from src.domains.scalars.gaussian import CoefficientMode
from src.domains.series.models import Signature

mv_app = typer.Typer(help="The straightening map to the log model and its reparametrizations.")


def parse_vector(values: list[str], n: int) -> list[complex]:
    """Complex entries written the Python way, e.g. 0.3 or 0.2-0.1j."""
    require(len(values) == n, f"expected {n} entries for --a, got {len(values)}")
    return [complex(v.replace(" ", "")) for v in values]


@handle_errors
def chain_command(
    a: list[str] = typer.Option(..., "--a", help="Initial velocity p'(0), one entry per coordinate."),
    e: int | None = typer.Option(None, "--e", help="Number of plus signs; n by default."),
    u_end: float = typer.Option(1.0, help="Integrate on [0, u_end]."),
    h: float | None = typer.Option(None, help="RK4 step; the configured chain step otherwise."),
    literal: bool = typer.Option(False, "--literal", help="Use the right-hand side exactly as printed."),
    csv: str = typer.Option("chain.csv", help="Trajectory file."),
    out: str = typer.Option("chain.json", help="Report file."),
):
    """Integrate the chain of the hyperquadric through the origin with velocity a."""
    n = len(a)
    require(n >= 1, "--a needs at least one entry")
    sig = Signature(n, n if e is None else e)
    require(h is None or h > 0, "--h must be positive")
    report, trajectory = ChainService().chain(sig, parse_vector(a, n), u_end, h, literal)
    path = store().write_csv(csv, trajectory.header(), trajectory.rows())
    report.result["trajectory_file"] = str(path)
    finish(report, out)


@mv_app.command("q")
@handle_errors
def q_command(
    alpha: float = typer.Option(..., help="Type alpha of the log model, nonzero."),
    rho: float = typer.Option(..., help="q'(0)."),
    r: float = typer.Option(0.0, help="q''(0) = 2*rho*r."),
    u_end: float = typer.Option(1.0, help="Integrate on [0, u_end]."),
    pairs: int = typer.Option(50, help="Random pairs for the turn-count relation."),
    out: str = typer.Option("mv_q.json", help="Report file."),
):
    """Closed-form and integrated reparametrization q(u)."""
    require(pairs >= 0, "--pairs must be non-negative")
    report = ChainService().mv_q(alpha, rho, r, u_end, pairs=pairs)
    kappa = complex(*report.result["kappa"])
    typer.echo(f"kappa = {kappa.real:.12g}{kappa.imag:+.12g}i, lambda = {report.result['lambda']:.12g}")
    finish(report, out)


@mv_app.command("map")
@handle_errors
def map_command(
    alpha: str = typer.Option(..., help="Type alpha, e.g. 1/2."),
    n: int = typer.Option(1, "--n", help="Dimension."),
    e: int | None = typer.Option(None, "--e", help="Number of plus signs; n by default."),
    weight: int | None = typer.Option(None, help="Truncation weight; the global --weight otherwise."),
    out: str = typer.Option("mv_map.json", help="Report file."),
):
    """Push the hyperquadric through the straightening map and compare with the log model."""
    mode = CoefficientMode(settings.MODE)
    trunc = settings.TRUNC_WEIGHT if weight is None else weight
    require(trunc >= 4, "the weight must be at least 4")
    report = ChainService().mv_map(Signature(n, n if e is None else e), parse_real(alpha, mode), trunc, mode)
    finish(report, out)
