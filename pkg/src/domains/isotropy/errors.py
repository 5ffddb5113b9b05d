from src.core.errors import DomainError


class IsotropyError(DomainError):
    """Base isotropy error."""

    pass


class SphericalSeries(IsotropyError):
    def __init__(self, trunc):
        super().__init__(f"Series agrees with the hyperquadric through weight {trunc}; no F_l to work with.")


class IncompatibleU(IsotropyError):
    def __init__(self, reason):
        super().__init__(f"U is not compatible with the form: {reason}.")


class NotIsotropyDirection(IsotropyError):
    def __init__(self, reason):
        super().__init__(f"U is not an isotropy direction: {reason}.")


class DegenerateSamplePoints(IsotropyError):
    def __init__(self, quantity, attempts):
        super().__init__(f"{quantity} vanishes or disagrees at all {attempts} sample points.")


class InvalidContext(IsotropyError):
    def __init__(self, reason):
        super().__init__(f"Invalid isotropy context: {reason}.")
