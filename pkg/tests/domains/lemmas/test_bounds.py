"""Tests for Δ(m), the tail functions F₁, F₂ and the large-m checks."""

from fractions import Fraction

import pytest

from src.domains.lemmas.bounds import (
    F1,
    F2,
    F2_defined,
    binomial_weight_sum,
    delta_sum,
    delta_sum_exact,
    f1_domination_check,
    f1_ratio,
    f1_tail_bound,
    seven_tenths,
)
from src.domains.lemmas.determinants import delta_bound_holds, delta_inv
from src.domains.lemmas.errors import F2DomainError, InvalidRange


@pytest.mark.parametrize("m", [1, 2, 3, 7, 30])
def test_binomial_weights_sum_to_one(m):
    assert binomial_weight_sum(m) == 1


@pytest.mark.parametrize("m", [1, 2, 4, 5, 12, 30, 64])
def test_exact_sum_is_reciprocal_of_ratio(m):
    assert 1 / delta_sum_exact(m) == delta_inv(m)


@pytest.mark.slow
def test_exact_sum_at_one_hundred():
    assert 1 / delta_sum_exact(100) == delta_inv(100)


@pytest.mark.parametrize("m", [3, 50, 200])
def test_float_sum_agrees_with_exact_ratio(m):
    value = float(delta_inv(m))
    assert 1 / float(delta_sum(m, 256)) == pytest.approx(value, rel=1e-14)


def test_exact_sum_range():
    with pytest.raises(InvalidRange):
        delta_sum_exact(201)
    with pytest.raises(InvalidRange):
        delta_sum(0)


@pytest.mark.parametrize(
    "m, expected",
    [(100, 2114.7), (200, 1.5207)],
)
def test_f1_values(m, expected):
    assert float(F1(m)) == pytest.approx(expected, rel=1e-3)


@pytest.mark.parametrize(
    "m, expected",
    [(400, 0.2247), (600, 0.1815), (800, 0.1564)],
)
def test_f2_values(m, expected):
    assert float(F2(m)) == pytest.approx(expected, rel=1e-3)


def test_f2_domain():
    assert not F2_defined(12)
    assert F2_defined(13)
    assert all(F2_defined(m) for m in range(13, 200))
    with pytest.raises(F2DomainError):
        F2(12)


def test_seven_tenths():
    assert [seven_tenths(m) for m in (1, 10, 13, 100)] == [0, 7, 9, 70]


@pytest.mark.parametrize("m", [100, 101, 102, 103, 250])
def test_f1_ratio_branches(m):
    formula, direct = f1_ratio(m)
    assert float(formula) == pytest.approx(float(direct), rel=1e-12)


def test_f1_domination_from_one_hundred():
    report = f1_domination_check(100, 200)
    assert report.row_passed(100)
    assert report.pairs_checked > 0


def test_f1_domination_counterexamples():
    """F₁ is not monotone enough for a fixed gap of 11: two pairs below 160 violate it."""
    report = f1_domination_check(100, 160)
    assert report.violations == [(107, 120), (117, 130)]
    assert not report.passed
    assert not report.row_passed(107) and report.row_passed(108)
    assert float(F1(107)) == pytest.approx(529.759, rel=1e-5)
    assert float(F1(120)) == pytest.approx(554.824, rel=1e-5)
    assert float(F1(107)) < float(F1(120))
    assert float(F1(117)) < float(F1(130))


def test_f1_domination_range():
    with pytest.raises(InvalidRange):
        f1_domination_check(50, 160)


def test_f1_tail_bound():
    report = f1_tail_bound(400, 1000)
    assert report.passed
    assert 400 <= report.worst_m < 400 + 11
    assert report.bound == Fraction(533, 10**6)


@pytest.mark.slow
def test_delta_bound_for_large_m():
    assert all(delta_bound_holds(m) for m in range(30, 801))
