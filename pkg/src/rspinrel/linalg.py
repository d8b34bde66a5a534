"""Exact dense linear algebra over the rationals (and polynomial entries).

Everything here targets the small systems that arise when comparing spans of
divisor relations (at most a few dozen rows and columns), so the algorithms
are the simple exact ones: Gauss-Jordan over Fraction for rank/nullspace,
fraction-free Bareiss elimination for determinants, and memoized minor
expansion for matrices with polynomial entries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .rpoly import RPoly


class RationalMatrix:
    """Rectangular matrix with homogeneous entries: all Fraction or all RPoly."""

    def __init__(self, entries: Sequence[Sequence]):
        rows = [list(row) for row in entries]
        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise ValueError("matrix rows have unequal lengths")
        else:
            width = 0
        has_poly = any(isinstance(x, RPoly) for row in rows for x in row)
        if has_poly:
            coerced = []
            for row in rows:
                coerced.append(
                    [x if isinstance(x, RPoly) else RPoly((x,)) for x in row]
                )
            self.entries: tuple[tuple, ...] = tuple(tuple(r) for r in coerced)
            self.is_polynomial = True
        else:
            self.entries = tuple(tuple(Fraction(x) for x in row) for row in rows)
            self.is_polynomial = False
        self.rows = len(rows)
        self.cols = width

    def determinant(self):
        return determinant(self)

    def rank_and_nullspace(self):
        return rank_and_solve(self)

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"


def _as_matrix(m) -> RationalMatrix:
    return m if isinstance(m, RationalMatrix) else RationalMatrix(m)


def rank_and_solve(m) -> tuple[int, list[tuple[Fraction, ...]]]:
    """Exact rank and a basis of the right nullspace of a rational matrix.

    Each basis vector v satisfies M v = 0 exactly, and
    rank + len(basis) == cols.
    """
    mat = _as_matrix(m)
    if mat.is_polynomial:
        raise ValueError("rank_and_solve requires rational entries")
    rows = [list(row) for row in mat.entries]
    ncols = mat.cols
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis: list[tuple[Fraction, ...]] = []
    for free in free_cols:
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row_idx, piv_col in enumerate(pivots):
            v[piv_col] = -rows[row_idx][free]
        basis.append(tuple(v))
    return rank, basis


def rref(m) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    mat = _as_matrix(m)
    if mat.is_polynomial:
        raise ValueError("rref requires rational entries")
    rows = [list(row) for row in mat.entries]
    pivots: list[int] = []
    rank = 0
    for col in range(mat.cols):
        pivot_row = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def determinant(m):
    """Exact determinant; Bareiss for rational entries, minor expansion for RPoly."""
    mat = _as_matrix(m)
    if mat.rows != mat.cols:
        raise ValueError("determinant of a non-square matrix")
    if mat.is_polynomial:
        return _minor_expansion_det(mat.entries, RPoly.zero(), RPoly((1,)))
    return _bareiss_det(mat.entries)


def _bareiss_det(entries: tuple[tuple[Fraction, ...], ...]) -> Fraction:
    n = len(entries)
    if n == 0:
        return Fraction(1)
    m = [list(row) for row in entries]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss update: exact division by the previous pivot.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _minor_expansion_det(entries, zero, one):
    n = len(entries)
    if n == 0:
        return one
    cache: dict[tuple[int, ...], object] = {}

    def minor(cols: tuple[int, ...]):
        if cols in cache:
            return cache[cols]
        row = n - len(cols)
        if not cols:
            return one
        total = zero
        for pos, col in enumerate(cols):
            entry = entries[row][col]
            if isinstance(entry, RPoly) and entry.is_zero():
                continue
            if not isinstance(entry, RPoly) and entry == 0:
                continue
            rest = cols[:pos] + cols[pos + 1:]
            term = entry * minor(rest)
            total = total - term if pos % 2 else total + term
        cache[cols] = total
        return total

    return minor(tuple(range(n)))
