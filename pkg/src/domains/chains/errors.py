from src.core.errors import DomainError, InputError


class ChainError(DomainError):
    """Base chain error."""

    pass


class ChainSingularity(ChainError):
    def __init__(self, state, denominator, partial=None):
        self.state = state
        self.partial = partial
        self.denominator = denominator
        super().__init__(f"Chain equation is singular at {state}: denominator {denominator:.3e}.")


class PoleError(ChainError):
    def __init__(self, what, value):
        super().__init__(f"{what} has a pole here: denominator {value}.")


class BranchCutError(ChainError):
    def __init__(self, value, guard):
        super().__init__(f"alpha*w = {value} is within {1 - guard:.2g} of the logarithm branch cut.")


class InvalidChainParameter(ChainError, InputError):
    def __init__(self, name, value, reason):
        super().__init__(f"Invalid {name}={value}: {reason}.")


class ExperimentalFeatureDisabled(ChainError):
    def __init__(self, feature):
        super().__init__(f"{feature} is experimental; pass experimental=True to use it.")
