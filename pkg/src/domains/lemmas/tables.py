from src.core.config.settings import settings
from src.domains.lemmas.determinants import eta, eta_candidates
from src.domains.lemmas.models import TableRow

PRINTED_ETA = {
    1: "2.66", 2: "4.5", 3: "2.75", 4: "0.36", 5: "-5.24",
    6: "12.05", 7: "0.64", 8: "-5.36", 9: "35.53", 10: "-0.11",
    11: "-7.14", 12: "39.86", 13: "-1.96", 14: "-9.84", 15: "19.83",
    16: "-4.61", 17: "-13.56", 18: "6.45", 19: "-7.76", 20: "-19.12",
    21: "-1.65", 22: "-11.21", 23: "-31.81", 24: "-7.43", 25: "-14.96",
    26: "118.96", 27: "-12.12", 28: "-19.25", 29: "-3.97", 30: "-16.30",
}


def table_row(m: int, tol: float | None = None) -> TableRow:
    """
    η(m) against the printed value.

    For m = 1 the printed 2.66… is det E₁(2)/det E₁(1) = 8/3; the recurrence
    reading det E₁(1)/det E₁(0) = 6 is kept as the alternate.
    """
    tol = settings.TABLE_TOL if tol is None else tol
    printed = PRINTED_ETA[m]
    if m == 1:
        alternate, exact = eta_candidates(1)
    else:
        alternate, exact = None, eta(m)
    gap = abs(float(exact) - float(printed))
    return TableRow(m=m, exact=exact, printed=printed, gap=gap, passed=gap <= tol, alternate=alternate)


def eta_table(tol: float | None = None) -> list[TableRow]:
    return [table_row(m, tol) for m in sorted(PRINTED_ETA)]


def _cell(row: TableRow) -> str:
    return f"eta({row.m:>2}) = {float(row.exact):>8.2f}"


def format_table(rows: list[TableRow], columns: int = 3) -> str:
    """Column-major layout: m, m+10, m+20 on one line."""
    height = -(-len(rows) // columns)
    lines = []
    for i in range(height):
        cells = [_cell(rows[j]) for j in range(i, len(rows), height)]
        lines.append("    ".join(cells))
    return "\n".join(lines)
