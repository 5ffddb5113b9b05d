"""
Fixed-step classical Runge-Kutta integration for real or complex state vectors.
"""

import math
from collections.abc import Callable, Iterator

import numpy as np

Rhs = Callable[[float, np.ndarray], np.ndarray]


def rk4_step(rhs: Rhs, t: float, h: float, y: np.ndarray) -> np.ndarray:
    """Single classical RK4 step from (t, y) to t + h."""
    k1 = rhs(t, y)
    k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1)
    k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2)
    k4 = rhs(t + h, y + h * k3)
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def step_grid(t0: float, t_end: float, h: float) -> np.ndarray:
    """
    Grid t0, t0+h, … ending exactly at t_end.

    The step count is rounded so that a t_end lying on the lattice up to
    float noise does not produce a sliver step.
    """
    if h <= 0:
        raise ValueError("step must be positive")
    span = t_end - t0
    if span == 0:
        return np.array([t0])
    steps = max(1, math.ceil(abs(span) / h - 1e-9))
    return t0 + np.sign(span) * np.minimum(np.arange(steps + 1) * h, abs(span))


def rk4_steps(rhs: Rhs, y0: np.ndarray, t0: float, t_end: float, h: float) -> Iterator[tuple[float, np.ndarray]]:
    """Yield (t, y) on the step grid, starting with the initial value."""
    grid = step_grid(t0, t_end, h)
    y = np.array(y0)
    yield float(grid[0]), y
    for t, t_next in zip(grid[:-1], grid[1:]):
        y = rk4_step(rhs, float(t), float(t_next - t), y)
        yield float(t_next), y


def integrate_rk4(rhs: Rhs, y0: np.ndarray, t0: float, t_end: float, h: float) -> tuple[np.ndarray, np.ndarray]:
    ts, ys = zip(*rk4_steps(rhs, y0, t0, t_end, h))
    return np.array(ts), np.array(ys)


def richardson_error(coarse: np.ndarray, fine: np.ndarray) -> float:
    """Error estimate of the fine solution from one step halving (order 4)."""
    return float(np.max(np.abs(fine - coarse))) / 15.0
