"""
Exact linear algebra over a number field: determinants, row echelon forms,
ranks and right kernels. Matrices are lists of rows of FieldElements.
"""

from typing import List, Sequence, Tuple

from .field import FieldElement
from ..custom_errors import DimensionMismatchError

Matrix = List[List[FieldElement]]


def _check_rectangular(rows: Sequence[Sequence[FieldElement]]) -> Tuple[int, int]:
    n_rows = len(rows)
    if n_rows == 0:
        raise DimensionMismatchError("Matrix has no rows")
    n_cols = len(rows[0])
    if any(len(r) != n_cols for r in rows):
        raise DimensionMismatchError("Matrix rows have different lengths")
    return n_rows, n_cols


def det2(a, b, c, d) -> FieldElement:
    """det [[a, b], [c, d]]"""
    return a * d - b * c


def det3(r0: Sequence, r1: Sequence, r2: Sequence) -> FieldElement:
    return (r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
            - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
            + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]))


def det4(r0: Sequence, r1: Sequence, r2: Sequence, r3: Sequence) -> FieldElement:
    # Laplace expansion along the first row, skipping zero entries
    total = None
    for j in range(4):
        if r0[j].is_zero():
            continue
        cols = [c for c in range(4) if c != j]
        minor = det3([r1[c] for c in cols], [r2[c] for c in cols], [r3[c] for c in cols])
        term = r0[j] * minor
        if total is None:
            total = term if j % 2 == 0 else -term
        else:
            total = total + term if j % 2 == 0 else total - term
    return total if total is not None else r0[0].field.zero


def determinant(rows: Sequence[Sequence[FieldElement]]) -> FieldElement:
    n_rows, n_cols = _check_rectangular(rows)
    if n_rows != n_cols:
        raise DimensionMismatchError(f"Determinant of a non-square {n_rows}x{n_cols} matrix")
    if n_rows == 1:
        return rows[0][0]
    if n_rows == 2:
        return det2(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    if n_rows == 3:
        return det3(*rows)
    if n_rows == 4:
        return det4(*rows)

    m = [list(r) for r in rows]
    field = m[0][0].field
    result = field.one
    for piv in range(n_rows):
        pivot_row = next((r for r in range(piv, n_rows) if not m[r][piv].is_zero()), None)
        if pivot_row is None:
            return field.zero
        if pivot_row != piv:
            m[piv], m[pivot_row] = m[pivot_row], m[piv]
            result = -result
        p = m[piv][piv]
        result = result * p
        p_inv = p.inverse()
        for r in range(piv + 1, n_rows):
            if m[r][piv].is_zero():
                continue
            factor = m[r][piv] * p_inv
            for c in range(piv, n_cols):
                m[r][c] = m[r][c] - factor * m[piv][c]
    return result


def row_echelon(rows: Sequence[Sequence[FieldElement]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)"""
    n_rows, n_cols = _check_rectangular(rows)
    m = [list(r) for r in rows]
    pivots: List[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        i_row = next((r for r in range(piv_r, n_rows) if not m[r][piv_c].is_zero()), None)
        if i_row is None:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        inv = m[piv_r][piv_c].inverse()
        m[piv_r] = [x * inv for x in m[piv_r]]
        for r in range(n_rows):
            if r == piv_r or m[r][piv_c].is_zero():
                continue
            fr = m[r][piv_c]
            m[r] = [a - fr * b for a, b in zip(m[r], m[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
    return m[:piv_r], pivots


def rank(rows: Sequence[Sequence[FieldElement]]) -> int:
    return len(row_echelon(rows)[1])


def nullspace(rows: Sequence[Sequence[FieldElement]]) -> Matrix:
    """Basis of the right kernel {x : rows * x = 0}, one vector per free column"""
    _, n_cols = _check_rectangular(rows)
    field = rows[0][0].field
    reduced, pivots = row_echelon(rows)
    free_vars = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for free in free_vars:
        sol = [field.zero] * n_cols
        sol[free] = field.one
        for r, piv_c in enumerate(pivots):
            sol[piv_c] = -reduced[r][free]
        basis.append(sol)
    return basis
