"""Tests for exact arithmetic in Q(√17) and its rounding to big floats."""

from fractions import Fraction

import mpmath
import pytest

from src.domains.scalars.bigfloat import BigFloat, quadext_to_float
from src.domains.scalars.errors import DivisionByZero, PrecisionMismatch, PrecisionTooLow
from src.domains.scalars.quadext import LAMBDA_1, LAMBDA_2, QuadExt, quadext_arith


def _random_quadext(rng) -> QuadExt:
    a, b = rng.integers(-50, 51, size=2)
    da, db = rng.integers(1, 20, size=2)
    return QuadExt(Fraction(int(a), int(da)), Fraction(int(b), int(db)))


def test_sqrt17_squares_to_17():
    assert quadext_arith(QuadExt.sqrt17(), QuadExt.sqrt17(), "×") == QuadExt(17)


def test_roots_of_x2_minus_3x_minus_2():
    """λ₁ + λ₂ = 3 and λ₁λ₂ = −2."""
    assert quadext_arith(LAMBDA_1, LAMBDA_2, "+") == 3
    assert quadext_arith(LAMBDA_1, LAMBDA_2, "×") == -2
    for root in (LAMBDA_1, LAMBDA_2):
        assert root * root - 3 * root - 2 == 0


def test_self_division_is_one():
    x = QuadExt(1, 1)
    assert quadext_arith(x, x, "÷") == 1


def test_division_by_zero_raises():
    with pytest.raises(DivisionByZero):
        quadext_arith(QuadExt(1, 1), QuadExt(0), "÷")


def test_unknown_operation_rejected():
    with pytest.raises(ValueError):
        quadext_arith(QuadExt(1), QuadExt(2), "^")


@pytest.mark.parametrize(
    "x, expected",
    [
        (QuadExt(4, -1), -1),  # 4 < √17
        (QuadExt(-4, 1), 1),
        (QuadExt(5, -1), 1),  # 5 > √17
        (QuadExt(0, 0), 0),
        (QuadExt(Fraction(33, 8), -1), 1),
        (QuadExt(Fraction(-1, 2), Fraction(3, 34)), -1),
    ],
)
def test_sign_is_exact(x, expected):
    assert x.sign() == expected


def test_sign_agrees_with_high_precision_image(rng):
    for _ in range(200):
        x = _random_quadext(rng)
        image = quadext_to_float(x, 256)
        expected = 0 if not x else (1 if image.value > 0 else -1)
        assert x.sign() == expected


def test_field_arithmetic_matches_bigfloat(rng):
    """Exact results rounded once agree with 256-bit arithmetic to 2^-240 relative."""
    bits = 256
    for _ in range(1000):
        x, y = _random_quadext(rng), _random_quadext(rng)
        fx, fy = quadext_to_float(x, bits), quadext_to_float(y, bits)
        for op, exact, approx in (("+", x + y, fx + fy), ("×", x * y, fx * fy)):
            if not exact:
                continue
            expected = quadext_to_float(exact, bits).value
            with mpmath.workprec(bits):
                assert abs(approx.value - expected) <= mpmath.ldexp(abs(expected), -240), op


@pytest.mark.parametrize("bits", [64, 128, 256])
def test_sqrt17_digits(bits):
    assert quadext_to_float(QuadExt.sqrt17(), bits).digits(12).startswith("4.12310562")


def test_lambda2_value():
    assert float(quadext_to_float(LAMBDA_2, 128)) == pytest.approx(3.5615528128088303, rel=1e-15)


def test_zero_rounds_to_zero():
    assert float(quadext_to_float(QuadExt(0), 128)) == 0.0


def test_cancelling_sum_keeps_relative_accuracy():
    """33 − 8√17 is tiny; the conjugate form keeps every requested bit."""
    x = QuadExt(33, -8)
    value = quadext_to_float(x, 128).value
    with mpmath.workprec(512):
        reference = mpmath.mpf(33) - 8 * mpmath.sqrt(17)
        assert abs(value - reference) <= mpmath.ldexp(abs(reference), -127)


def test_precision_below_minimum_rejected():
    with pytest.raises(PrecisionTooLow):
        quadext_to_float(QuadExt(1), 32)


def test_mixing_precisions_rejected():
    with pytest.raises(PrecisionMismatch):
        BigFloat.of(1, 128) + BigFloat.of(1, 256)


def test_bigfloat_lifts_rationals_and_quadext():
    x = BigFloat.of(Fraction(1, 3), 128)
    assert float(x * 3) == pytest.approx(1.0, abs=1e-30)
    assert float(x + QuadExt.sqrt17()) == pytest.approx(1 / 3 + 17**0.5)
