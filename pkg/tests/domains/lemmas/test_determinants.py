"""Tests for the tridiagonal families and their exact determinants."""

from fractions import Fraction

import pytest

from src.domains.lemmas.determinants import (
    delta_inv,
    delta_m,
    dense_det,
    det_C,
    det_C2,
    det_C3,
    det_E,
    det_E_column,
    eta,
    eta_candidates,
    eta_from_delta,
)
from src.domains.lemmas.errors import InvalidMatrixSpec, InvalidRange, UndefinedAtFour
from src.domains.lemmas.matrices import build
from src.domains.lemmas.models import BandMatrixSpec, MatrixFamily


def test_a_matrix_corners():
    assert build(BandMatrixSpec(MatrixFamily.A, 1)) == [[0, 2], [1, 3]]


@pytest.mark.parametrize("m", range(1, 21))
def test_c_is_shifted_a(m):
    a = build(BandMatrixSpec(MatrixFamily.A, m))
    c = build(BandMatrixSpec(MatrixFamily.C, m))
    for s in range(m + 1):
        for t in range(m + 1):
            assert c[s][t] == a[s][t] - (m - 4 if s == t else 0)


def test_b_first_row():
    assert build(BandMatrixSpec(MatrixFamily.B, 3))[0] == [1, 2, 3, 4]


@pytest.mark.parametrize(
    "family, m, size",
    [(MatrixFamily.B2, 5, 5), (MatrixFamily.C3, 5, 4), (MatrixFamily.E, 5, 3)],
)
def test_family_sizes(family, m, size):
    spec = BandMatrixSpec(family, m, 3 if family == MatrixFamily.E else None)
    rows = build(spec)
    assert spec.size == size
    assert len(rows) == size and all(len(r) == size for r in rows)


@pytest.mark.parametrize(
    "spec",
    [
        BandMatrixSpec(MatrixFamily.A, 0),
        BandMatrixSpec(MatrixFamily.B2, 2),
        BandMatrixSpec(MatrixFamily.B3, 3),
        BandMatrixSpec(MatrixFamily.E, 3, 5),
        BandMatrixSpec(MatrixFamily.E, 3),
    ],
)
def test_invalid_specs(spec):
    with pytest.raises(InvalidMatrixSpec):
        build(spec)


def test_recurrence_values_for_m4():
    assert det_E_column(4) == (1, 12, 100, 456, 168, -3648)


def test_initial_values():
    for m in range(1, 30):
        assert det_E(m, 1) == 2 * m + 4
        assert det_E(m, 2) == 4 * (m + 1) ** 2


def test_det_e5():
    assert det_E(5, 5) == -10752


@pytest.mark.parametrize("m", range(1, 16))
def test_dense_determinant_matches_recurrence(m):
    for s in range(1, m + 2):
        assert dense_det(BandMatrixSpec(MatrixFamily.E, m, s)) == det_E(m, s)


@pytest.mark.parametrize("m", range(1, 31))
def test_det_b_is_quarter_det_c(m):
    assert 4 * dense_det(BandMatrixSpec(MatrixFamily.B, m)) == det_C(m)


@pytest.mark.parametrize(
    "family, m, expected",
    [(MatrixFamily.B2, 3, 76), (MatrixFamily.B2, 4, 270), (MatrixFamily.B3, 4, 214)],
)
def test_restricted_b_by_hand(family, m, expected):
    assert dense_det(BandMatrixSpec(family, m)) == expected


@pytest.mark.parametrize("m", range(4, 31))
def test_restricted_determinants(m):
    """Rows below the first follow C_m(2), C_m(3), so the quarter identity holds."""
    assert 4 * dense_det(BandMatrixSpec(MatrixFamily.B2, m)) == det_C2(m)
    assert 4 * dense_det(BandMatrixSpec(MatrixFamily.B3, m)) == det_C3(m)


def test_det_e_range():
    with pytest.raises(InvalidRange):
        det_E(3, 5)
    with pytest.raises(InvalidRange):
        det_E(0, 1)
    with pytest.raises(InvalidRange):
        det_C2(2)
    with pytest.raises(InvalidRange):
        det_C3(3)


@pytest.mark.parametrize(
    "m, expected",
    [(2, Fraction(9, 2)), (3, Fraction(11, 4)), (4, Fraction(168, 456)), (5, Fraction(-21, 4))],
)
def test_eta_values(m, expected):
    assert eta(m) == expected


@pytest.mark.parametrize("m", [2, 3, 5, 6, 10, 29, 100])
def test_eta_displays_agree(m):
    assert eta(m) == eta_from_delta(m)


def test_eta_at_one():
    assert eta_candidates(1) == (Fraction(6), Fraction(8, 3))
    with pytest.raises(InvalidRange):
        eta(1)


def test_delta_inv_at_one_is_excluded_value():
    """Δ(1)⁻¹ = 8/3 coincides with −4/3·(m−3) at m = 1."""
    assert delta_inv(1) == Fraction(8, 3) == Fraction(-4, 3) * (1 - 3)


def test_delta_m():
    assert delta_m(2) == 1 - Fraction(10, 9) / 2
    with pytest.raises(UndefinedAtFour):
        delta_m(4)


def test_restricted_second_row_follows_c():
    assert build(BandMatrixSpec(MatrixFamily.B2, 5))[1] == [4, 5, 6, 0, 0]
    assert build(BandMatrixSpec(MatrixFamily.B3, 5))[1] == [3, 8, 8, 0]
    assert build(BandMatrixSpec(MatrixFamily.C2, 5))[1] == [4, 5, 6, 0, 0]
