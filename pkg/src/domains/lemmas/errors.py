from src.core.errors import DomainError, InputError


class LemmaError(DomainError):
    """Base matrix-lemma verification error."""

    pass


class InvalidMatrixSpec(LemmaError, InputError):
    def __init__(self, family, m, s, reason):
        super().__init__(f"Cannot build {family} for m={m}, s={s}: {reason}.")


class UndefinedAtFour(LemmaError):
    def __init__(self):
        super().__init__("delta_m = 1 - Delta(m)^-1/(4 - m) is undefined at m=4.")


class F2DomainError(LemmaError):
    def __init__(self, m):
        super().__init__(f"F2({m}) is undefined: 1/5 - (m+8)/(2m*sqrt(17)) must be positive (m >= 13).")


class InvalidRange(LemmaError, InputError):
    def __init__(self, name, value, reason):
        super().__init__(f"Invalid {name}={value}: {reason}.")
