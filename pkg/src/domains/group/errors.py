from src.core.errors import DomainError


class GroupError(DomainError):
    """Base hyperquadric group error."""

    pass


class IndeterminatePoint(GroupError):
    def __init__(self, point, denominator):
        super().__init__(f"Map is indeterminate at {point}: denominator {denominator} vanishes.")


class InvalidGroupElement(GroupError):
    def __init__(self, reason):
        super().__init__(f"Not an element of the isotropy group: {reason}.")


class LeftGroup(GroupError):
    def __init__(self, reason):
        super().__init__(f"Matrix product left the isotropy group: {reason}.")
