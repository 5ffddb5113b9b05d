"""Tests for the exact and float linear solvers."""

from fractions import Fraction

import numpy as np
import pytest

from src.services.errors import InconsistentSystem, ResidualTooLarge, UnderdeterminedSystem
from src.services.linear_solve import LinearSolver, integer_det


def test_integer_det():
    assert integer_det([[2, 3, 4], [2, 7, 6], [0, 1, 10]]) == 76
    assert integer_det([]) == 1
    assert integer_det([[10**30, 1], [1, 10**30]]) == 10**60 - 1


def test_solve_exact():
    solver = LinearSolver()
    rows = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(-1)]]
    assert solver.solve_exact(rows, [Fraction(5), Fraction(1)]) == [Fraction(1), Fraction(2)]


def test_solve_exact_overdetermined_consistent():
    solver = LinearSolver()
    rows = [[1, 0], [0, 1], [1, 1]]
    assert solver.solve_exact(rows, [Fraction(1, 3), Fraction(1, 2), Fraction(5, 6)]) == [Fraction(1, 3), Fraction(1, 2)]


def test_solve_exact_errors():
    solver = LinearSolver()
    with pytest.raises(InconsistentSystem):
        solver.solve_exact([[1, 1], [1, 1]], [1, 2])
    with pytest.raises(UnderdeterminedSystem):
        solver.solve_exact([[1, 1]], [1])


def test_solve_float_and_residual_gate():
    solver = LinearSolver(residual_tol=1e-10)
    x = solver.solve_float(np.array([[2.0, 0.0], [0.0, 4.0]]), np.array([1.0, 1.0]))
    assert np.allclose(x, [0.5, 0.25])
    with pytest.raises(ResidualTooLarge):
        solver.solve_float(np.array([[1.0], [1.0]]), np.array([0.0, 1.0]))
    with pytest.raises(UnderdeterminedSystem):
        solver.solve_float(np.array([[1.0, 1.0], [2.0, 2.0]]), np.array([1.0, 2.0]))


def test_ill_conditioned_system_warns(caplog):
    solver = LinearSolver(condition_warn=10.0)
    solver.solve_float(np.array([[1.0, 0.0], [0.0, 1e-3]]), np.array([1.0, 1e-3]), label="diagonal")
    assert any(r.getMessage() == "linear_solve.ill_conditioned" for r in caplog.records)


def test_rank():
    solver = LinearSolver(rank_tol=1e-10)
    assert solver.rank(np.array([[1.0, 2.0], [2.0, 4.0]])) == 1
    assert solver.rank(np.eye(3)) == 3
    assert solver.rank(np.zeros((2, 2))) == 0
    assert solver.rank(np.zeros((0, 0))) == 0
