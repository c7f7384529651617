"""Exact Pfaffians, determinants and linear solves."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from gmpy2 import mpq

from .diffpoly import DiffPoly, Q
from .errors import InconsistentSystemError, SingularMatrixError

__all__ = ["pfaffian", "det_expansion", "det_rational", "solve_exact", "rank_rational"]


def _as_poly_matrix(m) -> list[list[DiffPoly]]:
    return [[DiffPoly._coerce(v) for v in row] for row in m]


def _check_antisymmetric(m: list[list[DiffPoly]]):
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n % 2:
        raise ValueError("Pfaffian needs an even dimension")
    for i in range(n):
        if m[i][i]:
            raise ValueError("matrix is not antisymmetric (non-zero diagonal)")
        for j in range(i + 1, n):
            if m[i][j] + m[j][i]:
                raise ValueError(f"matrix is not antisymmetric at ({i},{j})")


def pfaffian(m) -> DiffPoly:
    """Pf by first-row expansion: sum_j (-1)^j m[0][j] Pf(minor without 0, j)."""
    m = _as_poly_matrix(m)
    _check_antisymmetric(m)

    @lru_cache(maxsize=None)
    def pf(rows: tuple) -> DiffPoly:
        if not rows:
            return DiffPoly.const(1)
        first, rest = rows[0], rows[1:]
        out = DiffPoly()
        for k, j in enumerate(rest):
            entry = m[first][j]
            if not entry:
                continue
            term = entry * pf(rest[:k] + rest[k + 1:])
            out = out - term if k % 2 else out + term
        return out

    return pf(tuple(range(len(m))))


def det_expansion(m) -> DiffPoly:
    """Determinant by Laplace expansion along rows, memoised on column sets.

    Division-free, so it works over polynomial entries.
    """
    m = _as_poly_matrix(m)
    n = len(m)

    @lru_cache(maxsize=None)
    def minor(cols: tuple) -> DiffPoly:
        row = n - len(cols)
        if not cols:
            return DiffPoly.const(1)
        out = DiffPoly()
        for k, c in enumerate(cols):
            entry = m[row][c]
            if not entry:
                continue
            term = entry * minor(cols[:k] + cols[k + 1:])
            out = out - term if k % 2 else out + term
        return out

    return minor(tuple(range(n)))


def _scalar(v) -> mpq:
    if isinstance(v, DiffPoly):
        if not v.is_constant():
            raise TypeError(f"expected a rational entry, got {v}")
        return v.constant_term()
    return Q(v)


def _to_rational(m) -> list[list[mpq]]:
    return [[_scalar(v) for v in row] for row in m]


def det_rational(m) -> mpq:
    """Determinant of a rational matrix by Gaussian elimination."""
    a = _to_rational(m)
    n = len(a)
    sign = 1
    result = mpq(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return mpq(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return result * sign


def _echelon(a: list[list[mpq]]) -> list[int]:
    """Reduced row echelon form in place; returns pivot columns."""
    rows, cols = len(a), len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [v / p for v in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def rank_rational(m) -> int:
    a = _to_rational(m)
    return len(_echelon(a)) if a else 0


def solve_exact(M, b: Sequence) -> list[mpq]:
    """Unique solution of ``M x = b``.

    Raises :class:`InconsistentSystemError` when no solution exists and
    :class:`SingularMatrixError` when the matrix is rank deficient but the
    system is consistent.
    """
    a = _to_rational(M)
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("expected a square system")
    aug = [row + [_scalar(v)] for row, v in zip(a, b)]
    pivots = _echelon(aug)
    if n in pivots:
        raise InconsistentSystemError("inconsistent system")
    if len(pivots) < n:
        raise SingularMatrixError("singular matrix")
    return [aug[i][n] for i in range(n)]
