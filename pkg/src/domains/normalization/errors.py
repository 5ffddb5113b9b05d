from src.core.errors import DomainError


class NormalizationError(DomainError):
    """Base normalization error."""

    pass


class InsufficientTruncation(NormalizationError):
    def __init__(self, trunc, minimum=6):
        super().__init__(
            f"Insufficient truncation to test F33: trunc_weight={trunc}, need at least {minimum}."
        )


class WeightTwoMismatch(NormalizationError):
    def __init__(self, found):
        super().__init__(f"Weight-2 part must equal <z,z>, found {found}.")


class SingularWeightSystem(NormalizationError):
    def __init__(self, weight, reason):
        super().__init__(f"Linear system at weight {weight} is not uniquely solvable: {reason}.")


class NonInvertibleLinearPart(NormalizationError):
    def __init__(self, reason):
        super().__init__(f"Map is not a formal biholomorphism: {reason}.")


class SignatureFlipUnsupported(NormalizationError):
    def __init__(self, sig):
        super().__init__(
            f"rho < 0 requires a form with e = n/2; signature {sig} admits no U with <Uz,Uz> = -<z,z>."
        )
