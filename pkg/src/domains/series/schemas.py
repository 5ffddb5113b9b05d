from pydantic import BaseModel, Field

from src.domains.scalars.codec import format_complex, parse_complex
from src.domains.scalars.gaussian import CoefficientMode
from src.domains.series.maps import MapSeries
from src.domains.series.models import Monomial, Signature
from src.domains.series.series import DefiningSeries, Series


class TermSchema(BaseModel):
    zi: list[int]
    zj: list[int]
    u: int = 0
    re: str | int | float
    im: str | int | float = "0"


class SeriesFile(BaseModel):
    n: int
    e: int
    trunc_weight: int = Field(ge=0)
    mode: CoefficientMode = CoefficientMode.EXACT
    terms: list[TermSchema] = []


class MapSeriesSchema(BaseModel):
    f: list[SeriesFile]
    g: SeriesFile


def series_to_schema(series: Series) -> SeriesFile:
    terms = []
    for mon, c in series.sorted_terms():
        re, im = format_complex(c, series.mode)
        terms.append(TermSchema(zi=list(mon.zi), zj=list(mon.zj), u=mon.l, re=re, im=im))
    return SeriesFile(
        n=series.sig.n,
        e=series.sig.e,
        trunc_weight=series.trunc,
        mode=series.mode,
        terms=terms,
    )


def _terms(data: SeriesFile) -> dict:
    out = {}
    for term in data.terms:
        if len(term.zi) != data.n or len(term.zj) != data.n:
            raise ValueError(f"term exponents must have length n={data.n}")
        out[Monomial(tuple(term.zi), tuple(term.zj), term.u)] = parse_complex(term.re, term.im, data.mode)
    return out


def schema_to_defining(data: SeriesFile) -> DefiningSeries:
    """Reality of the loaded series is validated here."""
    return DefiningSeries(Signature(data.n, data.e), data.trunc_weight, _terms(data), data.mode)


def map_to_schema(m: MapSeries) -> MapSeriesSchema:
    return MapSeriesSchema(f=[series_to_schema(part) for part in m.f], g=series_to_schema(m.g))
