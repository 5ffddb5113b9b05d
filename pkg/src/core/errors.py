class AppError(Exception):
    """Base class for all errors raised by the lab."""

    pass


class DomainError(AppError):
    """A mathematical precondition or invariant failed."""

    pass


class InputError(DomainError):
    """
    An argument or input value lies outside what an operation accepts.

    Raised before any computation starts; the CLI reports these as usage
    errors (exit 1) rather than as failed checks.
    """

    pass


class InfraError(AppError):
    """Reading or writing an input or report file failed."""

    pass
