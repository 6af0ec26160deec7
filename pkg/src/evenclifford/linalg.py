"""Exact linear algebra over the rationals for small dense systems."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class SingularMatrix(ArithmeticError):
    pass


def _frac_matrix(a: Sequence[Sequence]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in a]


def row_echelon(a: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = _frac_matrix(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve the square system ``a x = b`` exactly; raise SingularMatrix if rank-deficient."""
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("solve needs a square matrix and matching right-hand side")
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = row_echelon(aug)
    if pivots != list(range(n)):
        raise SingularMatrix(f"rank {len([p for p in pivots if p < n])} < {n}")
    return [m[i][n] for i in range(n)]


def rank(a: Sequence[Sequence]) -> int:
    return len(row_echelon(a)[1])


def nullspace(a: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of ``{x : a x = 0}``, one vector per free column."""
    m, pivots = row_echelon(a)
    cols = len(a[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -m[r][f]
        basis.append(v)
    return basis


def matvec(a: Sequence[Sequence], x: Sequence) -> list:
    return [sum(aij * xj for aij, xj in zip(row, x)) for row in a]
