"""Tests for the linear map a ↦ H_{l+1}(·; a) and the recovery of ρ, a, r from U."""

import numpy as np
import pytest

from src.domains.isotropy.correction import g_correction
from src.domains.isotropy.errors import IncompatibleU, InvalidContext, SphericalSeries
from src.domains.isotropy.extraction import a_of_U, form_sign, r_of_U, rho_of_U
from src.domains.isotropy.hmap import h_map, injectivity_rank, kappa_display_check, solve_h_map
from src.domains.isotropy.models import IsotropyContext, lowest_component
from src.domains.normalization.projection import random_normal_form
from src.domains.scalars.gaussian import CoefficientMode
from src.domains.series.models import Monomial, Signature
from src.domains.series.series import DefiningSeries, Series

FLOAT = CoefficientMode.FLOAT


def _context(sig, l, rng) -> IsotropyContext:
    F = random_normal_form(sig, l + 2, rng, FLOAT, min_weight=l, max_weight=l)
    return IsotropyContext.from_normal_form(F)


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("l", [4, 6, 8])
def test_rank_is_full_for_random_normal_forms(n, l, rng):
    sig = Signature(n, n)
    if n == 1 and l == 4:
        pytest.skip("one-variable normal forms have no weight-4 part")
    for _ in range(5):
        assert injectivity_rank(_context(sig, l, rng)) == 2 * n


def test_rank_zero_for_vanishing_component():
    ctx = IsotropyContext.build(Series.zero(Signature(2, 2), 6, FLOAT), 6)
    assert injectivity_rank(ctx) == 0


def test_h_map_is_real_linear(rng):
    ctx = _context(Signature(2, 1), 6, rng)
    a = np.array([0.3 - 0.2j, 0.1 + 0.5j])
    b = np.array([-0.4 + 0.1j, 0.2j])
    assert (h_map(ctx, a + b) - h_map(ctx, a) - h_map(ctx, b)).max_abs() <= 1e-12
    assert (h_map(ctx, 2.5 * a) - h_map(ctx, a).scale(2.5)).max_abs() <= 1e-12
    assert h_map(ctx, np.zeros(2)).max_abs() == 0


def test_solve_h_map_inverts(rng):
    ctx = _context(Signature(2, 2), 6, rng)
    a = np.array([0.7 + 0.1j, -0.3 + 0.4j])
    assert np.allclose(solve_h_map(ctx, h_map(ctx, a)), a, atol=1e-9)


def test_context_rejects_low_weight_and_bad_types():
    sig = Signature(1, 1)
    with pytest.raises(InvalidContext):
        IsotropyContext.build(Series.zero(sig, 3, FLOAT), 3)
    bad = Series(sig, 6, {Monomial((3,), (1,), 0): 1.0}, FLOAT)
    with pytest.raises(InvalidContext):
        IsotropyContext.build(bad, 4)


def test_spherical_series_has_no_lowest_component():
    with pytest.raises(SphericalSeries):
        lowest_component(Series.hermitian(Signature(1, 1), 8, FLOAT))


def test_kappa_display_for_zero_shift(rng):
    ctx = _context(Signature(2, 2), 6, rng)
    report = kappa_display_check(ctx, [0, 0])
    assert report.derived == [0, 0]
    assert report.matching == "u^(3-k)"


def test_kappa_display_lower_exponent_is_not_a_series(rng):
    ctx = _context(Signature(2, 2), 6, rng)
    report = kappa_display_check(ctx, [0.5 + 0.25j, -0.5])
    assert report.gaps["u^(2-k)"] == float("inf")


def test_kappa_display_needs_even_weight(rng):
    with pytest.raises(InvalidContext):
        kappa_display_check(_context(Signature(2, 2), 5, rng), [0, 0])


def _rotation_invariant_form() -> DefiningSeries:
    """⟨z,z⟩ + z⁴z̄⁴ in one variable: normal, nonspherical at l = 8, invariant under z ↦ e^{iθ}z."""
    sig = Signature(1, 1)
    return DefiningSeries(sig, 10, {Monomial((1,), (1,), 0): 1.0, Monomial((4,), (4,), 0): 1.0}, FLOAT)


def test_extraction_for_a_rotation():
    F = _rotation_invariant_form()
    U = np.array([[np.exp(0.7j)]])
    assert form_sign(F, U) == 1
    rho = rho_of_U(F, U)
    assert rho == pytest.approx(1.0, abs=1e-9)
    a_star, a = a_of_U(F, U, rho)
    assert np.allclose(a, 0, atol=1e-9)
    assert r_of_U(F, U, rho, a) == pytest.approx(0.0, abs=1e-9)


def test_extraction_rejects_non_unitary_u():
    with pytest.raises(IncompatibleU):
        form_sign(_rotation_invariant_form(), np.array([[2.0]]))


@pytest.mark.parametrize("l", [5, 6])
def test_correction_vanishes_at_zero_shift(l, rng):
    ctx = _context(Signature(2, 1), l, rng)
    assert g_correction(ctx, np.zeros(2)).max_abs() <= 1e-15


@pytest.mark.parametrize("l, offsets", [(5, {0}), (6, {1})])
def test_correction_types(l, offsets, rng):
    ctx = _context(Signature(2, 2), l, rng)
    G = g_correction(ctx, np.array([0.4 - 0.3j, 0.2 + 0.6j]))
    assert G.is_real(1e-12)
    assert {abs(m.type[0] - m.type[1]) for m in G.terms} <= offsets
    assert all(m.weight == l + 1 for m in G.terms)


def test_correction_is_zero_without_f33_and_f24():
    """u·(z₁²z̄₂² + z₂²z̄₁²) has only a harmonic (2,2) part, so κ = 0."""
    sig = Signature(2, 2)
    F = DefiningSeries(sig, 8, {Monomial((2, 0), (0, 2), 1): 1.0, Monomial((0, 2), (2, 0), 1): 1.0}, FLOAT)
    ctx = IsotropyContext.build(F, 6)
    G = g_correction(ctx, np.array([0.5 + 0.5j, -0.25j]))
    assert G.max_abs() <= 1e-12
