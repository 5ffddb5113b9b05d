from pydantic import BaseModel

from src.domains.group.models import GroupElement
from src.domains.scalars.codec import format_complex, format_real, parse_complex, parse_real
from src.domains.scalars.gaussian import CoefficientMode
from src.domains.series.models import Signature


Scalar = str | int | float


class GroupFile(BaseModel):
    n: int
    e: int
    mode: CoefficientMode = CoefficientMode.EXACT
    U: list[list[tuple[Scalar, Scalar]]]
    a: list[tuple[Scalar, Scalar]]
    rho: Scalar
    r: Scalar


def element_to_schema(sigma: GroupElement) -> GroupFile:
    mode = sigma.mode
    return GroupFile(
        n=sigma.sig.n,
        e=sigma.sig.e,
        mode=mode,
        U=[[format_complex(x, mode) for x in row] for row in sigma.U],
        a=[format_complex(x, mode) for x in sigma.a],
        rho=format_real(sigma.rho, mode),
        r=format_real(sigma.r, mode),
    )


def schema_to_element(data: GroupFile) -> GroupElement:
    mode = data.mode
    return GroupElement.build(
        Signature(data.n, data.e),
        [[parse_complex(re, im, mode) for re, im in row] for row in data.U],
        [parse_complex(re, im, mode) for re, im in data.a],
        parse_real(data.rho, mode),
        parse_real(data.r, mode),
        mode,
    )
