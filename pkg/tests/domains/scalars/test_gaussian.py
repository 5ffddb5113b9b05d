"""Tests for exact Gaussian rationals and the coefficient-mode helpers."""

from fractions import Fraction

import numpy as np
import pytest

from src.domains.scalars.errors import DivisionByZero, NotASquare
from src.domains.scalars.gaussian import (
    CoefficientMode,
    GaussianRational,
    I,
    is_rational_square,
    rational_sqrt,
    to_real,
    to_scalar,
)


def test_lowest_terms_and_hash():
    a = GaussianRational(Fraction(2, 4), Fraction(6, 4))
    b = GaussianRational(Fraction(1, 2), Fraction(3, 2))
    assert a == b
    assert hash(a) == hash(b)
    assert {a: "x"}[b] == "x"
    # real values hash like the rationals they equal
    assert GaussianRational(3) == 3
    assert hash(GaussianRational(Fraction(3, 5))) == hash(Fraction(3, 5))


def test_parts_are_fractions():
    z = GaussianRational(Fraction(1, 3), -2)
    assert isinstance(z.real, Fraction) and z.real == Fraction(1, 3)
    assert isinstance(z.imag, Fraction) and z.imag == -2
    assert z.conjugate().imag == 2
    assert z.norm() == Fraction(1, 9) + 4
    assert complex(z) == pytest.approx(1 / 3 - 2j)


def test_field_operations():
    z = GaussianRational(3, 4)
    assert z * z.inverse() == 1
    assert 1 / z == GaussianRational(Fraction(3, 25), Fraction(-4, 25))
    assert I * I == -1
    assert z**-2 * z**2 == 1
    assert z - z == 0 and not (z - z)
    assert abs(z) == pytest.approx(5.0)
    with pytest.raises(DivisionByZero):
        GaussianRational(0).inverse()


def test_object_arrays():
    """numpy object arrays only need the operator protocol on their entries."""
    m = np.array([[GaussianRational(1), I], [-I, GaussianRational(2)]], dtype=object)
    product = m @ m
    assert product[0, 0] == 2
    assert product[0, 1] == GaussianRational(0, 3)
    assert all(isinstance(x, GaussianRational) for x in product.ravel())
    assert np.allclose(product.astype(complex), m.astype(complex) @ m.astype(complex))


def test_mode_helpers():
    assert to_scalar(0.5 + 0.25j, CoefficientMode.EXACT) == GaussianRational(Fraction(1, 2), Fraction(1, 4))
    assert to_scalar(Fraction(1, 3), CoefficientMode.FLOAT) == pytest.approx(1 / 3)
    assert to_real(GaussianRational(Fraction(7, 2), 1), CoefficientMode.EXACT) == Fraction(7, 2)
    assert to_real(2 + 1j, CoefficientMode.FLOAT) == 2.0


@pytest.mark.parametrize(
    "value, expected",
    [(Fraction(9, 4), True), (Fraction(0), True), (Fraction(2), False), (Fraction(-4), False), (Fraction(4, 3), False)],
)
def test_rational_squares(value, expected):
    assert is_rational_square(value) is expected
    if expected:
        assert rational_sqrt(value) ** 2 == value
    else:
        with pytest.raises(NotASquare):
            rational_sqrt(value)
