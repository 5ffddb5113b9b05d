from src.core.errors import DomainError


class ScalarError(DomainError):
    """Base scalar arithmetic error."""

    pass


class DivisionByZero(ScalarError):
    def __init__(self, value):
        super().__init__(f"Division by zero: {value} has no inverse.")


class PrecisionTooLow(ScalarError):
    def __init__(self, bits, minimum):
        super().__init__(f"Precision of {bits} bits is below the minimum of {minimum}.")


class PrecisionMismatch(ScalarError):
    def __init__(self, left_bits, right_bits):
        super().__init__(
            f"Cannot combine BigFloat values at {left_bits} and {right_bits} bits."
        )


class NotASquare(ScalarError):
    def __init__(self, value):
        super().__init__(f"{value} is not the square of a rational number.")
