import typer

from src.application.lemmas.service import LemmaService
from src.cli.common import finish, require
from src.cli.exceptions import handle_errors
from src.core.config.settings import settings
from src.domains.lemmas.determinants import dense_det
from src.domains.lemmas.matrices import build
from src.domains.lemmas.models import BandMatrixSpec, MatrixFamily
from src.workers.audit_worker import AuditWorker, AuditWorkerDependencies

app = typer.Typer(help="Exact verification of the tridiagonal matrix lemmas and their tables.")


def _service(workers: int | None = None) -> LemmaService:
    deps = AuditWorkerDependencies()
    if workers is not None:
        deps.workers = workers
    return LemmaService(AuditWorker(deps), bits=settings.PRECISION_BITS)


@app.command("audit")
@handle_errors
def audit_command(
    m_max: int = typer.Option(30, "--m-max", help="Audit m = 1..m_max."),
    workers: int | None = typer.Option(None, help="Worker processes; 1 runs inline."),
    sum_check_max: int = typer.Option(100, help="Largest m for the exact binomial-sum identity."),
    out: str = typer.Option("lemmas_audit.json", help="Report file."),
):
    """Determinants, criteria and the |delta_m| bound for every m up to m_max."""
    require(m_max >= 1, "--m-max must be at least 1")
    require(workers is None or workers >= 1, "--workers must be at least 1")
    report, _ = _service(workers).audit(m_max, sum_check_max=sum_check_max)
    finish(report, out)


@app.command("eta-table")
@handle_errors
def table_command(out: str = typer.Option("eta_table.json", help="Report file.")):
    """The eta(m) table for m = 1..30 in three columns."""
    report, text = _service(1).table()
    typer.echo(text)
    finish(report, out)


@app.command("constants")
@handle_errors
def constants_command(out: str = typer.Option("lemmas_constants.json", help="Report file.")):
    """F1, F2 at the printed points, the F1 tail bound and the ratio branches."""
    finish(_service(1).constants(), out)


@app.command("domination")
@handle_errors
def domination_command(
    m_lo: int = typer.Option(100, "--m-lo"),
    m_hi: int = typer.Option(200, "--m-hi"),
    out: str = typer.Option("lemmas_domination.json", help="Report file."),
):
    """F1(k) <= F1(m) for m_lo <= m and m+11 <= k <= m_hi."""
    require(100 <= m_lo < m_hi <= 2000, "need 100 <= m_lo < m_hi <= 2000")
    finish(_service(1).domination(m_lo, m_hi), out)


@app.command("eigen")
@handle_errors
def eigen_command(
    m_max: int = typer.Option(100, "--m-max"),
    out: str = typer.Option("lemmas_eigen.json", help="Report file."),
):
    """Dense eigenvalues of A_m against the closed formula."""
    require(1 <= m_max <= 200, "--m-max must lie in 1..200")
    finish(_service(1).eigen(m_max), out)


@app.command("precision")
@handle_errors
def precision_command(
    m_max: int = typer.Option(200, "--m-max"),
    out: str = typer.Option("lemmas_precision.json", help="Report file."),
):
    """High-precision binomial sums against the exact recurrence."""
    require(m_max >= 1, "--m-max must be at least 1")
    finish(_service(1).precision_cross_check(m_max), out)


@app.command("liouville")
@handle_errors
def liouville_command(
    q_max: int = typer.Option(10**6, "--q-max", help="Largest convergent denominator."),
    scan: int = typer.Option(10**3, "--scan", help="Largest denominator of the exhaustive scan."),
    out: str = typer.Option("lemmas_liouville.json", help="Report file."),
):
    """|sqrt(17) - p/q| > 2/(17 q^2), exactly."""
    require(q_max >= 1 and scan >= 1, "--q-max and --scan must be positive")
    finish(_service(1).liouville(q_max, scan), out)


@app.command("matrix")
@handle_errors
def matrix_command(
    family: str = typer.Argument(..., help="A_m, C_m, B_m, B_m2, B_m3, C_m2, C_m3 or E_m_s."),
    m: int = typer.Argument(...),
    s: int | None = typer.Option(None, help="Block size for E_m_s."),
):
    """Print one matrix and its exact determinant."""
    spec = BandMatrixSpec(MatrixFamily(family), m, s)
    for row in build(spec):
        typer.echo(" ".join(f"{x:>6}" for x in row))
    typer.echo(f"det = {dense_det(spec)}")
