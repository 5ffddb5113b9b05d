import functools
import logging
from collections.abc import Callable
from uuid import uuid4

import click
import typer

from src.core.errors import DomainError, InfraError, InputError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2

USAGE_ERRORS = (InputError, InfraError, ValueError)


def handle_errors(command: Callable) -> Callable:
    """
    Map exceptions of a command to exit codes.

    Bad arguments and unreadable or non-real input files exit 1, mathematical
    precondition failures exit 2. Anything else is logged with an error id
    and exits 2.
    """

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except typer.Exit:
            raise
        except click.ClickException as e:
            e.show()
            raise typer.Exit(EXIT_USAGE) from e
        except USAGE_ERRORS as e:
            typer.echo(f"usage error: {e}", err=True)
            raise typer.Exit(EXIT_USAGE) from e
        except DomainError as e:
            typer.echo(f"error: {e}", err=True)
            raise typer.Exit(EXIT_CHECK_FAILED) from e
        except Exception as e:
            error_id = uuid4()
            logger.error(f"Unhandled exception {error_id}: {e}", exc_info=True)
            typer.echo(f"unexpected error {error_id}; see the log", err=True)
            raise typer.Exit(EXIT_CHECK_FAILED) from e

    return wrapper
