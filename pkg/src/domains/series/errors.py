from src.core.errors import DomainError, InputError


class SeriesError(DomainError):
    """Base series algebra error."""

    pass


class InvalidSignature(SeriesError, InputError):
    def __init__(self, n, e):
        super().__init__(f"Signature needs 0 <= e <= n and n >= 1, got n={n}, e={e}.")


class SignatureMismatch(SeriesError):
    def __init__(self, left, right):
        super().__init__(f"Cannot combine series of signatures {left} and {right}.")


class ModeMismatch(SeriesError):
    def __init__(self, left, right):
        super().__init__(f"Cannot combine {left} and {right} coefficients.")


class RealityViolation(SeriesError, InputError):
    def __init__(self, monomial, defect):
        super().__init__(
            f"Series is not real: coefficient of {monomial} differs from the conjugate of its mirror by {defect}."
        )


class InvalidTrace(SeriesError):
    def __init__(self, s, t, reason):
        super().__init__(f"Trace of type ({s},{t}) is undefined: {reason}.")
