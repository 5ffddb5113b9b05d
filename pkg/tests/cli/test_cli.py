"""End-to-end command tests: exit codes, echoed results and report files."""

import json

import pytest
import typer

from src.cli.app import app, main
from src.cli.exceptions import EXIT_CHECK_FAILED, EXIT_USAGE, handle_errors
from src.core.errors import DomainError, InputError
from src.domains.chains.errors import InvalidChainParameter
from src.domains.lemmas.errors import InvalidMatrixSpec, InvalidRange, UndefinedAtFour
from src.domains.series.errors import InvalidSignature, RealityViolation


@pytest.fixture
def run(isolated_settings):
    """main() with reports sent to the temporary directory."""

    def _run(*args: str) -> int:
        return main(["--out-dir", str(isolated_settings), *args])

    return _run


def _report(directory, name: str) -> dict:
    return json.loads((directory / name).read_text())


def test_table_command(run, isolated_settings, capsys):
    assert run("lemmas", "eta-table") == 0
    assert "eta( 5) =    -5.25" in capsys.readouterr().out
    report = _report(isolated_settings, "eta_table.json")
    assert report["config"]["command"] == "lemmas eta-table"
    assert all(c["status"] == "pass" for c in report["checks"])


def test_audit_rejects_empty_range(run):
    assert run("lemmas", "audit", "--m-max", "0") == 1


def test_small_audit(run, isolated_settings):
    assert run("lemmas", "audit", "--m-max", "12", "--workers", "1", "--sum-check-max", "12") == 0
    assert _report(isolated_settings, "lemmas_audit.json")["result"]["summary"]["records"] == 12


def test_matrix_command(run, capsys):
    assert run("lemmas", "matrix", "A_m", "1") == 0
    out = capsys.readouterr().out
    assert "det = -2" in out


def test_unknown_family(run):
    assert run("lemmas", "matrix", "D_m", "1") == 1


def test_mv_q_echoes_kappa(run, capsys):
    assert run("mv", "q", "--alpha", "1", "--rho", "2", "--r", "0", "--pairs", "10") == 0
    assert "kappa = -0.333333333333" in capsys.readouterr().out


def test_mv_q_rejects_zero_alpha(run):
    assert run("mv", "q", "--alpha", "0", "--rho", "2") == 1


def test_mv_map(run, isolated_settings):
    assert run("--weight", "8", "mv", "map", "--alpha", "1/2") == 0
    assert _report(isolated_settings, "mv_map.json")["result"]["model_gap"] == 0


def test_group_compose_identity(run, isolated_settings, fixtures_dir):
    identity = str(fixtures_dir / "identity_n1.json")
    assert run("group", "compose", identity, identity) == 0
    product = _report(isolated_settings, "product.json")
    assert product["rho"] == "1/1" and product["r"] == "0/1"


def test_group_invert(run, isolated_settings, fixtures_dir):
    assert run("group", "invert", str(fixtures_dir / "identity_n1.json")) == 0
    assert (isolated_settings / "inverse.json").exists()


def test_group_action(run):
    assert run("group", "action", "--n", "2", "--e", "1", "--count", "50") == 0


def test_normalize_hyperquadric(run, isolated_settings, fixtures_dir):
    code = run(
        "normalize",
        str(fixtures_dir / "hyperquadric_n1.json"),
        "--sigma",
        str(fixtures_dir / "identity_n1.json"),
    )
    assert code == 0
    report = _report(isolated_settings, "normalize.json")
    assert report["result"]["output"]["trunc_weight"] == 8


def test_normalize_check_only_flags_perturbation(run, fixtures_dir):
    assert run("normalize", str(fixtures_dir / "perturbed_n1.json"), "--check-only") == 2


def test_normalize_perturbation(run, fixtures_dir):
    assert run("normalize", str(fixtures_dir / "perturbed_n1.json")) == 0


def test_normalize_rejects_non_real_file(run, fixtures_dir):
    assert run("normalize", str(fixtures_dir / "non_real_n1.json")) == 1


def test_normalize_rejects_missing_file(run, isolated_settings):
    assert run("normalize", str(isolated_settings / "missing.json")) == 1


def test_normalize_rejects_excess_weight(run, fixtures_dir):
    assert run("normalize", str(fixtures_dir / "perturbed_n1.json"), "--weight", "9") == 1


def test_chain_command(run, isolated_settings):
    assert run("chain", "--a", "0.8+0.3j", "--u-end", "0.5", "--h", "1e-3") == 0
    lines = (isolated_settings / "chain.csv").read_text().splitlines()
    assert lines[0] == "u,re_z1,im_z1,re_w,im_w,line_defect"
    assert len(lines) == 502
    assert _report(isolated_settings, "chain.json")["result"]["trajectory_file"].endswith("chain.csv")


def test_chain_rejects_bad_step(run):
    assert run("chain", "--a", "0.5", "--h", "0") == 1


def test_isotropy_rank(run, isolated_settings):
    assert run("isotropy", "rank", "--n", "2", "--l", "4", "--samples", "3") == 0
    assert _report(isolated_settings, "isotropy_rank.json")["result"]["ranks"] == [4, 4, 4]


def test_isotropy_rank_spherical_weight(run):
    assert run("isotropy", "rank", "--n", "1", "--l", "4", "--samples", "1") == 2


def test_global_option_validation(run):
    assert run("--bits", "20", "lemmas", "eta-table") == 1


def test_help_lists_commands(runner):
    result = runner.invoke(app, ["--help"])
    assert result.exit_code == 0
    for name in ("normalize", "chain", "mv", "group", "isotropy", "lemmas"):
        assert name in result.output


@pytest.mark.parametrize(
    "error",
    [
        InvalidRange("m_max", 0, "must be at least 1"),
        InvalidMatrixSpec("B2", 2, None, "defined for m >= 3"),
        InvalidSignature(2, 3),
        RealityViolation("z^(1)", 0.5),
        InvalidChainParameter("h", 0, "step must be nonzero"),
    ],
)
def test_input_errors_exit_as_usage(error):
    assert isinstance(error, InputError) and isinstance(error, DomainError)

    @handle_errors
    def command():
        raise error

    with pytest.raises(typer.Exit) as exc:
        command()
    assert exc.value.exit_code == EXIT_USAGE


def test_other_domain_errors_exit_as_check_failure():
    @handle_errors
    def command():
        raise UndefinedAtFour()

    assert not isinstance(UndefinedAtFour(), InputError)
    with pytest.raises(typer.Exit) as exc:
        command()
    assert exc.value.exit_code == EXIT_CHECK_FAILED
