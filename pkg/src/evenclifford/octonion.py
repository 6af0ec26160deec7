"""The 8-dimensional associative octonion-like algebra.

It is the even subalgebra of Cl(4, 0) with generators e_x, e_y, e_z, e_inf
mapped to indices 0, 1, 2, 3.  The units u_1..u_6 are the lambda-scaled
bivectors and u_7 the lambda-scaled pseudoscalar; u_0 and u_7 square to +1,
the other six to -1.
"""

from __future__ import annotations

import math

import numpy as np

from .algebra import LambdaElement, LambdaUnit, StructureTable, check_lambda, parse_table
from .errors import SingularElement
from .linalg import SingularMatrix, solve

X, Y, Z, INF = 0, 1, 2, 3


class OctonionLike(LambdaElement):
    __slots__ = ()

    DIM = 8
    N = 4
    WORDS = (
        (),
        (X, Y),
        (Z, X),
        (Y, Z),
        (X, INF),
        (Y, INF),
        (Z, INF),
        (X, Y, Z, INF),
    )
    NAMES = tuple(f"u_{i}" for i in range(8))
    ALGEBRA = "octonion-like"

    def seminorm_sq(self, which: int):
        return seminorm_sq(self, which)

    def inverse(self):
        return inverse(self)


def basis_blades() -> tuple[LambdaUnit, ...]:
    return OctonionLike.units()


def derive_structure_table(lam: int = 1) -> StructureTable:
    return OctonionLike.table(lam)


def multiply(x: OctonionLike, y: OctonionLike) -> OctonionLike:
    return x.multiply(y)


def dagger(x: OctonionLike) -> OctonionLike:
    return x.dagger()


def seminorm_sq(x: OctonionLike, which: int):
    """Squared seminorm; ``which=1`` evaluates the form at lambda=+1, ``which=2`` at -1.

    sum x_i^2 - 2*lam*(x1 x6 + x2 x5 + x3 x4) + 2*lam*x0 x7, regardless of the
    orientation ``x`` was built with.  See :func:`covariant_seminorm_sq` for
    the version that follows the element's own orientation.
    """
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    lam = 1 if which == 1 else -1
    return _form(x.coeffs, lam, lam)


def covariant_seminorm_sq(x: OctonionLike, which: int):
    """scalar(x x^dagger) +/- lam * u_7-coefficient(x x^dagger).

    Multiplicative in either orientation and equal to :func:`seminorm_sq`
    when lam = +1.  For lam = -1 the sign of the x0*x7 term flips relative
    to the printed form.
    """
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    s = 1 if which == 1 else -1
    return _form(x.coeffs, s, s * x.lam)


def _form(c, cross_sign, pseudo_sign):
    cross = c[1] * c[6] + c[2] * c[5] + c[3] * c[4]
    return sum(v * v for v in c) - 2 * cross_sign * cross + 2 * pseudo_sign * c[0] * c[7]


def left_matrix(x: OctonionLike) -> list[list]:
    return x.left_matrix()


def right_matrix(y: OctonionLike) -> list[list]:
    return y.right_matrix()


def closed_form_eigenvalues(x: OctonionLike) -> list[complex]:
    """Eigenvalues of the left multiplication matrix, each with multiplicity two.

    (x0 + lam x7) +/- i*sqrt(q1) and (x0 - lam x7) +/- i*sqrt(q2), where
    q1 = (x1-x6)^2 + (x2-x5)^2 + (x3-x4)^2 and q2 uses sums instead.
    """
    c = [float(v) for v in x.coeffs]
    q1 = (c[1] - c[6]) ** 2 + (c[2] - c[5]) ** 2 + (c[3] - c[4]) ** 2
    q2 = (c[1] + c[6]) ** 2 + (c[2] + c[5]) ** 2 + (c[3] + c[4]) ** 2
    a1, a2 = c[0] + x.lam * c[7], c[0] - x.lam * c[7]
    r1, r2 = math.sqrt(q1), math.sqrt(q2)
    return [
        complex(a1, r1), complex(a1, r1),
        complex(a1, -r1), complex(a1, -r1),
        complex(a2, r2), complex(a2, r2),
        complex(a2, -r2), complex(a2, -r2),
    ]


def eigen_magnitudes_sq(x: OctonionLike) -> list[float]:
    return [abs(v) ** 2 for v in closed_form_eigenvalues(x)]


def numeric_eigenvalues(x: OctonionLike) -> np.ndarray:
    m = np.array(left_matrix(x), dtype=float)
    return np.linalg.eigvals(m)


def inverse(x: OctonionLike) -> OctonionLike:
    """Two-sided inverse, found by solving left_matrix(x) @ y = e_0.

    Raises SingularElement when either (orientation-covariant) seminorm
    vanishes; at lam=+1 these are exactly the two printed seminorms.
    """
    zero = [w for w in (1, 2) if _is_zero(covariant_seminorm_sq(x, w))]
    if zero:
        raise SingularElement(zero, x)
    rhs = [1] + [0] * 7
    if any(isinstance(c, float) for c in x.coeffs):
        sol = np.linalg.solve(np.array(left_matrix(x), dtype=float), np.array(rhs, dtype=float))
        return OctonionLike([float(v) for v in sol], x.lam)
    try:
        sol = solve(left_matrix(x), rhs)
    except SingularMatrix:
        raise SingularElement((), x) from None
    return OctonionLike(sol, x.lam)


def _is_zero(v) -> bool:
    if isinstance(v, float):
        return abs(v) < 1e-12
    return v == 0


def self_conjugate_product(x: OctonionLike) -> tuple:
    """Return the (u_0, u_7) coefficients of x x^dagger.

    The six imaginary coefficients must vanish; anything else means the
    structure table is wrong.
    """
    p = x * x.dagger()
    leftover = [p.coeffs[i] for i in range(1, 7) if p.coeffs[i] != 0]
    assert not leftover, f"x x^dagger has imaginary part {leftover}"
    return p.coeffs[0], p.coeffs[7]


# Multiplication table as printed for lambda=+1, rows and columns u_0..u_7.
PRINTED_TABLE_ROWS = (
    "1   u_1  u_2  u_3  u_4  u_5  u_6  u_7",
    "u_1 -1   u_3  -u_2 -u_5 u_4  u_7  -u_6",
    "u_2 -u_3 -1   u_1  u_6  u_7  -u_4 -u_5",
    "u_3 u_2  -u_1 -1   u_7  -u_6 u_5  -u_4",
    "u_4 u_5  -u_6 u_7  -1   -u_1 u_2  -u_3",
    "u_5 -u_4 u_7  u_6  u_1  -1   -u_3 -u_2",
    "u_6 u_7  u_4  -u_5 -u_2 u_3  -1   -u_1",
    "u_7 -u_6 -u_5 -u_4 -u_3 -u_2 -u_1 1",
)

# Displayed left (x) and right (y) multiplication matrices; entry "-x3" means -x_3.
PRINTED_LEFT_MATRIX = (
    "x0 -x1 -x2 -x3 -x4 -x5 -x6 x7",
    "x1 x0 -x3 x2 x5 -x4 -x7 -x6",
    "x2 x3 x0 -x1 -x6 -x7 x4 -x5",
    "x3 -x2 x1 x0 -x7 x6 -x5 -x4",
    "x4 -x5 x6 -x7 x0 x1 -x2 -x3",
    "x5 x4 -x7 -x6 -x1 x0 x3 -x2",
    "x6 -x7 -x4 x5 x2 -x3 x0 -x1",
    "x7 x6 x5 x4 x3 x2 x1 x0",
)
PRINTED_RIGHT_MATRIX = (
    "y0 -y1 -y2 -y3 -y4 -y5 -y6 y7",
    "y1 y0 y3 -y2 -y5 y4 -y7 -y6",
    "y2 -y3 y0 y1 y6 -y7 -y4 -y5",
    "y3 y2 -y1 y0 -y7 -y6 y5 -y4",
    "y4 y5 -y6 -y7 y0 -y1 y2 -y3",
    "y5 -y4 -y7 y6 y1 y0 -y3 -y2",
    "y6 -y7 y4 -y5 -y2 y3 y0 -y1",
    "y7 y6 y5 y4 y3 y2 y1 y0",
)


def printed_table() -> list[list[tuple[int, int]]]:
    return parse_table(PRINTED_TABLE_ROWS, OctonionLike.NAMES)


def parse_symbolic_matrix(rows) -> list[list[tuple[int, int]]]:
    """``"x0 -x1 ..."`` rows to ``(variable index, sign)`` cells."""
    out = []
    for row in rows:
        cells = []
        for cell in row.split():
            s = -1 if cell.startswith("-") else 1
            cells.append((int(cell.lstrip("+-")[1:]), s))
        out.append(cells)
    return out


def symbolic_pattern(matrix_of) -> list[list[tuple[int, int]]]:
    """Recover the ``(variable, sign)`` layout of a matrix that is linear in x.

    ``matrix_of(i)`` must return the matrix for the indicator element u_i.
    Each cell must pick up exactly one variable.
    """
    mats = [matrix_of(i) for i in range(8)]
    out = []
    for r in range(8):
        row = []
        for c in range(8):
            hits = [(i, mats[i][r][c]) for i in range(8) if mats[i][r][c] != 0]
            assert len(hits) == 1, f"cell ({r},{c}) mixes variables {hits}"
            i, v = hits[0]
            row.append((i, int(v)))
        out.append(row)
    return out


def table_diff(lam: int = 1) -> list[dict]:
    """Entries where the derived table disagrees with the printed one."""
    lam = check_lambda(lam)
    t = derive_structure_table(lam)
    diffs = []
    for i, row in enumerate(printed_table()):
        for j, (k, s) in enumerate(row):
            if t.product(i, j) != (k, s):
                diffs.append({
                    "row": OctonionLike.NAMES[i],
                    "col": OctonionLike.NAMES[j],
                    "printed_entry": ("-" if s < 0 else "") + OctonionLike.NAMES[k],
                    "derived_entry": t.entry_name(i, j),
                })
    return diffs


def eigen_check(x: OctonionLike, rtol: float = 1e-9) -> bool:
    """Compare closed-form eigenvalues against a dense solver as multisets.

    The left matrix is normal (its transpose is the matrix of x^dagger), so
    the repeated eigenvalues are well conditioned.
    """
    closed = closed_form_eigenvalues(x)
    remaining = list(numeric_eigenvalues(x))
    scale = max(1.0, max(abs(z) for z in closed))
    for z in closed:
        best = min(remaining, key=lambda w: abs(w - z))
        if abs(best - z) > rtol * scale:
            return False
        remaining.remove(best)
    return True


__all__ = [
    "OctonionLike",
    "basis_blades",
    "derive_structure_table",
    "multiply",
    "dagger",
    "seminorm_sq",
    "covariant_seminorm_sq",
    "left_matrix",
    "right_matrix",
    "closed_form_eigenvalues",
    "eigen_magnitudes_sq",
    "numeric_eigenvalues",
    "inverse",
    "self_conjugate_product",
    "printed_table",
    "table_diff",
    "PRINTED_LEFT_MATRIX",
    "PRINTED_RIGHT_MATRIX",
]
