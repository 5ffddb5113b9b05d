"""Tests for the continued-fraction convergents of √17 and the Liouville-type bound."""

from fractions import Fraction

import pytest

from src.domains.scalars.codec import (
    format_rational,
    parse_rational,
    quadext_from_json,
    quadext_to_json,
)
from src.domains.scalars.convergents import liouville_check, liouville_margin, sqrt17_convergents
from src.domains.scalars.quadext import QuadExt


@pytest.mark.parametrize(
    "q_max, expected",
    [
        (1, [(4, 1)]),
        (10, [(4, 1), (33, 8)]),
        (100, [(4, 1), (33, 8), (268, 65)]),
    ],
)
def test_convergents(q_max, expected):
    assert sqrt17_convergents(q_max) == expected


def test_convergents_are_best_approximations():
    """Brute force over every q ≤ 70: the record-setting fractions are the convergents."""
    best, records = None, []
    for q in range(1, 71):
        for p in range(4 * q, 5 * q + 1):
            gap = abs(QuadExt(Fraction(p, q), -1))
            if best is None or gap < best:
                best = gap
                records.append((p, q))
    assert [r for r in records if r in sqrt17_convergents(70)] == sqrt17_convergents(70)


def test_q_max_must_be_positive():
    with pytest.raises(ValueError):
        sqrt17_convergents(0)


def test_margin_positive_on_convergents():
    for p, q in sqrt17_convergents(10**6):
        assert liouville_margin(p, q).sign() > 0


def test_liouville_check_passes():
    report = liouville_check(q_max_convergents=10**6, q_max_scan=10**3, bits=128)
    assert report.passed
    assert report.convergents_checked == len(sqrt17_convergents(10**6))
    assert report.scanned_denominators == 1000
    assert float(report.constant) == pytest.approx(17**0.5 + 18**0.5)


@pytest.mark.parametrize("text, value", [("3/4", Fraction(3, 4)), ("-7", Fraction(-7)), ("-1.25", Fraction(-5, 4))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


def test_rational_format_is_reduced():
    assert format_rational(Fraction(6, 8)) == "3/4"
    assert format_rational(5) == "5/1"


def test_quadext_json_shape():
    x = QuadExt(Fraction(1, 2), Fraction(-3, 34))
    assert quadext_to_json(x) == {"a": "1/2", "b": "-3/34"}
    assert quadext_from_json(quadext_to_json(x)) == x
