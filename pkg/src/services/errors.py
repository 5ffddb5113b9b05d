from src.core.errors import DomainError


class LinearSolveError(DomainError):
    """Base linear algebra error."""

    pass


class InconsistentSystem(LinearSolveError):
    def __init__(self, rows, cols):
        super().__init__(f"Linear system of {rows} equations in {cols} unknowns is inconsistent.")


class UnderdeterminedSystem(LinearSolveError):
    def __init__(self, rank, cols):
        super().__init__(f"Linear system has rank {rank} but {cols} unknowns.")


class ResidualTooLarge(LinearSolveError):
    def __init__(self, residual, tolerance):
        super().__init__(f"Least-squares residual {residual:.3e} exceeds tolerance {tolerance:.1e}.")
