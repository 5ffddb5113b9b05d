"""Tests for weight-by-weight normalization, the normal-form predicate and the group law."""

import logging
from fractions import Fraction

import pytest

from src.domains.group.models import GroupElement
from src.domains.group.operations import random_element
from src.domains.normalization.errors import InsufficientTruncation, WeightTwoMismatch
from src.domains.normalization.group_law import normalization_group_law
from src.domains.normalization.model_series import log_model
from src.domains.normalization.models import NormalFormType
from src.domains.normalization.predicate import is_normal_form
from src.domains.normalization.projection import project_to_normal_form, random_normal_form
from src.domains.normalization.solver import normalize
from src.domains.normalization.transform import transform_defining
from src.domains.scalars.gaussian import CoefficientMode
from src.domains.series.models import Signature
from src.domains.series.schemas import SeriesFile, schema_to_defining
from src.domains.series.series import Series
from src.services.file_store import ReportStore

EXACT = CoefficientMode.EXACT


def test_hyperquadric_is_a_fixpoint():
    sig = Signature(1, 1)
    Q = Series.hermitian(sig, 10)
    result = normalize(Q, GroupElement.identity(sig))
    assert result.high.is_identity()
    assert result.output == Q
    assert result.sigma.is_identity()
    assert all(v == 0 for v in result.residuals.values())


def test_hyperquadric_fixpoint_in_two_variables():
    sig = Signature(2, 1)
    Q = Series.hermitian(sig, 6)
    result = normalize(Q, GroupElement.identity(sig))
    assert result.high.is_identity()
    assert result.output == Q


def test_normal_input_gives_identity_map(rng):
    sig = Signature(1, 1)
    F = random_normal_form(sig, 7, rng, EXACT)
    assert is_normal_form(F)[0]
    result = normalize(F, GroupElement.identity(sig))
    assert result.high.is_identity()
    assert result.output == F


def test_projection_lands_in_normal_form(sig, rng):
    F = random_normal_form(sig, 6, rng, EXACT)
    ok, report = is_normal_form(F)
    assert ok, report.defects
    assert project_to_normal_form(F) == F


def test_golden_perturbation(fixtures_dir):
    """A perturbed hyperquadric normalizes exactly, and the result is a fixpoint."""
    F = schema_to_defining(ReportStore.read_model(fixtures_dir / "perturbed_n1.json", SeriesFile))
    sig = F.sig
    result = normalize(F, GroupElement.identity(sig))
    ok, report = is_normal_form(result.output)
    assert ok, report.defects
    assert all(v == 0 for v in result.residuals.values())
    again = normalize(result.output, GroupElement.identity(sig))
    assert again.high.is_identity()
    assert again.output == result.output


def test_golden_perturbation_is_deterministic(fixtures_dir):
    F = schema_to_defining(ReportStore.read_model(fixtures_dir / "perturbed_n1.json", SeriesFile))
    first = normalize(F, GroupElement.identity(F.sig))
    second = normalize(F, GroupElement.identity(F.sig))
    assert first.output == second.output
    assert first.high.f == second.high.f and first.high.g == second.high.g


@pytest.mark.parametrize("alpha", [Fraction(1, 4), Fraction(1, 2), Fraction(1)])
def test_log_model_is_normal_for_its_type(alpha):
    sig = Signature(1, 1)
    model = log_model(sig, 8, alpha)
    target = NormalFormType(alpha, 0)
    assert is_normal_form(model, target)[0]
    assert not is_normal_form(model)[0]
    assert normalize(model, GroupElement.identity(sig), target).high.is_identity()


def test_group_law_on_hyperquadric(rng):
    sig = Signature(1, 1)
    Q = Series.hermitian(sig, 6)
    s1, s2 = random_element(sig, rng, EXACT), random_element(sig, rng, EXACT)
    assert normalization_group_law(Q, s1, s2)


def test_group_law_on_perturbed_normal_form(rng):
    sig = Signature(1, 1)
    F = random_normal_form(sig, 6, rng, CoefficientMode.FLOAT, scale=0.1)
    s1 = random_element(sig, rng, CoefficientMode.FLOAT, scale=0.2)
    s2 = random_element(sig, rng, CoefficientMode.FLOAT, scale=0.2)
    assert normalization_group_law(F, s1, s2, tol=1e-9)


def test_truncation_below_six_rejected():
    sig = Signature(1, 1)
    with pytest.raises(InsufficientTruncation):
        normalize(Series.hermitian(sig, 5), GroupElement.identity(sig))


def test_wrong_quadratic_part_rejected():
    sig = Signature(1, 1)
    with pytest.raises(WeightTwoMismatch):
        normalize(Series.hermitian(sig, 6).scale(2), GroupElement.identity(sig))


def test_identity_transform_keeps_series(rng):
    sig = Signature(1, 1)
    F = random_normal_form(sig, 7, rng, EXACT)
    assert transform_defining(F, GroupElement.identity(sig)) == F


@pytest.mark.parametrize("signature", [(1, 1), (2, 1)])
def test_isotropy_maps_hyperquadric_to_itself(signature, rng):
    sig = Signature(*signature)
    Q = Series.hermitian(sig, 6)
    for _ in range(2):
        sigma = random_element(sig, rng, EXACT)
        assert transform_defining(Q, sigma) == Q


def test_transform_respects_truncation(rng):
    sig = Signature(1, 1)
    F = random_normal_form(sig, 8, rng, EXACT)
    out = transform_defining(F, random_element(sig, rng, EXACT), trunc=6)
    assert out.trunc == 6


def test_non_square_rho_normalizes_in_float(caplog):
    sig = Signature(1, 1)
    Q = Series.hermitian(sig, 6)
    sigma = GroupElement.build(sig, [[1]], [0], 2, 0, EXACT)
    result = normalize(Q, sigma)
    assert result.output.mode == CoefficientMode.FLOAT
    assert result.output.close_to(Series.hermitian(sig, 6, CoefficientMode.FLOAT), 1e-9)
    assert any("not a rational square" in r.getMessage() for r in caplog.records)


def test_solver_logs_under_module_name(caplog):
    sig = Signature(1, 1)
    with caplog.at_level(logging.INFO, logger="src.domains.normalization.solver"):
        normalize(Series.hermitian(sig, 6), GroupElement.identity(sig))
    assert any(r.name == "src.domains.normalization.solver" and "Solved weight" in r.getMessage() for r in caplog.records)
