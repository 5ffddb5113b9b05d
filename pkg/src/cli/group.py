import typer

from src.application.group.service import GroupService
from src.cli.common import finish, require, store
from src.cli.exceptions import handle_errors
from src.cli.normalize import load_element
from src.domains.group.schemas import element_to_schema
from src.domains.series.models import Signature

app = typer.Typer(help="Composition, inversion and action of the hyperquadric isotropy group.")


@app.command("compose")
@handle_errors
def compose_command(
    first: str = typer.Argument(..., help="Group element applied second."),
    second: str = typer.Argument(..., help="Group element applied first."),
    product: str = typer.Option("product.json", help="File for the product element."),
    out: str = typer.Option("group_compose.json", help="Report file."),
):
    """The product first ∘ second."""
    s1, s2 = load_element(first), load_element(second)
    require(s1.sig == s2.sig, f"signatures differ: {s1.sig} and {s2.sig}")
    require(s1.mode == s2.mode, "both elements must use the same coefficient mode")
    report, element = GroupService().compose(s1, s2)
    store().write_json(product, element_to_schema(element).model_dump(mode="json"))
    finish(report, out)


@app.command("invert")
@handle_errors
def invert_command(
    element: str = typer.Argument(..., help="Group element."),
    inverse: str = typer.Option("inverse.json", help="File for the inverse element."),
    out: str = typer.Option("group_invert.json", help="Report file."),
):
    """The inverse element."""
    report, result = GroupService().invert(load_element(element))
    store().write_json(inverse, element_to_schema(result).model_dump(mode="json"))
    finish(report, out)


@app.command("action")
@handle_errors
def action_command(
    n: int = typer.Option(1, "--n", help="Dimension."),
    e: int | None = typer.Option(None, "--e", help="Number of plus signs; n by default."),
    count: int = typer.Option(10**4, help="Random (element, point) pairs."),
    out: str = typer.Option("group_action.json", help="Report file."),
):
    """Random elements keep random hyperquadric points on the hyperquadric."""
    require(count >= 1, "--count must be at least 1")
    finish(GroupService().action_property(Signature(n, n if e is None else e), count), out)
