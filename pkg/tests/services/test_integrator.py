"""Tests for the fixed-step RK4 integrator."""

import numpy as np
import pytest

from src.services.integrator import integrate_rk4, richardson_error, rk4_steps, step_grid


def test_step_grid_ends_exactly():
    grid = step_grid(0.0, 1.0, 0.3)
    assert grid[0] == 0.0 and grid[-1] == 1.0
    assert len(grid) == 5


def test_step_grid_absorbs_float_noise():
    assert len(step_grid(0.0, 0.3, 0.1)) == 4


def test_step_grid_backwards_and_degenerate():
    grid = step_grid(1.0, 0.0, 0.5)
    assert list(grid) == [1.0, 0.5, 0.0]
    assert list(step_grid(2.0, 2.0, 0.1)) == [2.0]
    with pytest.raises(ValueError):
        step_grid(0.0, 1.0, 0.0)


def test_rk4_on_complex_rotation():
    ts, ys = integrate_rk4(lambda t, y: 1j * y, np.array([1.0 + 0j]), 0.0, 1.0, 1e-2)
    assert abs(ys[-1][0] - np.exp(1j)) <= 1e-9
    assert ts[-1] == 1.0


def test_fourth_order_convergence():
    errors = []
    for h in (0.02, 0.01):
        _, ys = integrate_rk4(lambda t, y: -y, np.array([1.0]), 0.0, 1.0, h)
        errors.append(abs(ys[-1][0] - np.exp(-1.0)))
    assert 14.0 <= errors[0] / errors[1] <= 18.0


def test_steps_start_with_initial_value():
    first = next(rk4_steps(lambda t, y: y, np.array([2.0]), 0.0, 1.0, 0.5))
    assert first[0] == 0.0 and first[1][0] == 2.0


def test_richardson_error():
    assert richardson_error(np.array([1.0, 2.0]), np.array([1.0, 2.15])) == pytest.approx(0.01)
