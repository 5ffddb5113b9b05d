from fractions import Fraction

from src.domains.scalars.gaussian import CoefficientMode, GaussianRational
from src.domains.scalars.quadext import QuadExt


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str | int) -> Fraction:
    """Accept "p/q", an integer, or a finite decimal string such as "-1.25"."""
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text).strip())


def format_real(x, mode: CoefficientMode) -> str:
    if mode == CoefficientMode.EXACT:
        return format_rational(x)
    return repr(float(x))


def parse_real(text, mode: CoefficientMode):
    if mode == CoefficientMode.EXACT:
        return parse_rational(text)
    return float(text)


def format_complex(z, mode: CoefficientMode) -> tuple[str, str]:
    if mode == CoefficientMode.EXACT:
        return format_rational(z.real), format_rational(z.imag)
    z = complex(z)
    return repr(z.real), repr(z.imag)


def parse_complex(re, im, mode: CoefficientMode):
    if mode == CoefficientMode.EXACT:
        return GaussianRational(parse_rational(re), parse_rational(im))
    return complex(float(re), float(im))


def quadext_to_json(x: QuadExt) -> dict[str, str]:
    return {"a": format_rational(x.a), "b": format_rational(x.b)}


def quadext_from_json(data: dict[str, str]) -> QuadExt:
    return QuadExt(parse_rational(data["a"]), parse_rational(data["b"]))
