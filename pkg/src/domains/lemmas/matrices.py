"""
Integer tridiagonal matrices A_m, C_m = A_m − (m−4)·I, B_m and the restricted
families B_m(2), B_m(3), C_m(2), C_m(3), E_m(s).

Rows and columns are indexed s = 0..m. A_m has diagonal 3s, superdiagonal
2(s+1) and subdiagonal m−s. E_m(s) is the trailing s×s block of C_m.
"""

from src.domains.lemmas.errors import InvalidMatrixSpec
from src.domains.lemmas.models import BandMatrixSpec, MatrixFamily

# (first row start, diagonal offset added to the top-left entry, smallest m)
_RESTRICTED = {
    MatrixFamily.B2: (2, 2, 3),
    MatrixFamily.C2: (2, 2, 3),
    MatrixFamily.B3: (3, 4, 4),
    MatrixFamily.C3: (3, 4, 4),
}


def _a_matrix(m: int) -> list[list[int]]:
    rows = [[0] * (m + 1) for _ in range(m + 1)]
    for s in range(m + 1):
        rows[s][s] = 3 * s
        if s < m:
            rows[s][s + 1] = 2 * (s + 1)
            rows[s + 1][s] = m - s
    return rows


def _c_matrix(m: int) -> list[list[int]]:
    rows = _a_matrix(m)
    for s in range(m + 1):
        rows[s][s] -= m - 4
    return rows


def _trailing(m: int, s: int) -> list[list[int]]:
    c = _c_matrix(m)
    start = m + 1 - s
    return [row[start:] for row in c[start:]]


def build(spec: BandMatrixSpec) -> list[list[int]]:
    family, m = spec.family, spec.m
    if m < 1:
        raise InvalidMatrixSpec(family.value, m, spec.s, "m must be at least 1")

    if family == MatrixFamily.A:
        return _a_matrix(m)
    if family == MatrixFamily.C:
        return _c_matrix(m)
    if family == MatrixFamily.B:
        rows = _c_matrix(m)
        rows[0] = list(range(1, m + 2))
        return rows
    if family == MatrixFamily.E:
        if spec.s is None or not 1 <= spec.s <= m + 1:
            raise InvalidMatrixSpec(family.value, m, spec.s, "need 1 <= s <= m+1")
        return _trailing(m, spec.s)

    start, shift, m_min = _RESTRICTED[family]
    if m < m_min:
        raise InvalidMatrixSpec(family.value, m, spec.s, f"defined for m >= {m_min}")
    # B_m(2), B_m(3) share rows 1.. with C_m(2), C_m(3); the (1,1) entry is
    # 10-m and 13-m, which is what makes det B = det C / 4 hold
    rows = _trailing(m, m + 2 - start)
    rows[0][0] += shift
    if family in (MatrixFamily.B2, MatrixFamily.B3):
        rows[0] = list(range(start, m + 2))
    return rows
