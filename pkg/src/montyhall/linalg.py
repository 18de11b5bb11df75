"""Small exact linear-algebra helpers.

The workhorse is a fraction-free (Bareiss) integer elimination: systems
are scaled row-wise to integers once, eliminated with plain int
arithmetic, and converted back to Fractions only during back
substitution.  That keeps the vertex-enumeration inner loops exact and
fast without any floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

Matrix = list[list[Fraction]]


def scale_row_to_int(coeffs, rhs=None) -> tuple[list[int], int]:
    """Clear denominators of one equation; returns (int coefficients, int rhs)."""
    values = list(coeffs) if rhs is None else list(coeffs) + [rhs]
    mult = lcm(*(Fraction(v).denominator for v in values)) if values else 1
    ints = [int(v * mult) for v in values]
    if rhs is None:
        return ints, 0
    return ints[:-1], ints[-1]


def _int_echelon(aug: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination; returns echelon rows and pivot columns."""
    m = len(aug)
    if m == 0:
        return aug, []
    width = len(aug[0])
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(width):
        pivot_row = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        p = aug[r][c]
        for i in range(r + 1, m):
            row = aug[i]
            f = row[c]
            if f:
                aug[i] = [(p * x - f * y) // prev for x, y in zip(row, aug[r])]
            elif prev != 1 or p != 1:
                aug[i] = [(p * x) // prev for x in row]
        pivots.append(c)
        prev = p
        r += 1
        if r == m:
            break
    return aug, pivots


def solve_unique_int(
    rows: list[list[int]], rhs: list[int], n: int
) -> list[Fraction] | None:
    """Solve an integer system for n unknowns; None unless unique and consistent."""
    aug = [row + [b] for row, b in zip(rows, rhs)]
    aug, pivots = _int_echelon(aug)
    if n in pivots:
        return None  # pivot in the rhs column: inconsistent
    coeff_pivots = [p for p in pivots if p < n]
    if len(coeff_pivots) < n:
        return None  # underdetermined
    solution: list[Fraction] = [Fraction(0)] * n
    for k in range(len(coeff_pivots) - 1, -1, -1):
        row = aug[k]
        c = coeff_pivots[k]
        acc = Fraction(row[n])
        for j in range(c + 1, n):
            if row[j]:
                acc -= row[j] * solution[j]
        solution[c] = acc / row[c]
    return solution


def int_rank(rows: list[list[int]]) -> int:
    if not rows:
        return 0
    _, pivots = _int_echelon([row[:] for row in rows])
    return len(pivots)


def rank(rows: Matrix) -> int:
    if not rows:
        return 0
    return int_rank([scale_row_to_int(row)[0] for row in rows])


def solve_unique(a: Matrix, b: list[Fraction]) -> list[Fraction] | None:
    """Solve a x = b exactly; None unless the solution exists and is unique.

    Accepts rectangular systems: with more rows than unknowns the redundant
    rows must be consistent, with fewer (or dependent) rows there is no
    unique solution and None is returned.
    """
    if not a:
        return [] if not b else None
    n = len(a[0])
    rows, rhs = [], []
    for coeffs, r in zip(a, b):
        ints, ir = scale_row_to_int(coeffs, r)
        rows.append(ints)
        rhs.append(ir)
    return solve_unique_int(rows, rhs, n)


def invert(a: Matrix) -> Matrix | None:
    """Exact inverse of a square matrix, or None if singular."""
    n = len(a)
    columns = []
    for j in range(n):
        unit = [Fraction(1 if i == j else 0) for i in range(n)]
        col = solve_unique([list(row) for row in a], unit)
        if col is None:
            return None
        columns.append(col)
    return [[columns[j][i] for j in range(n)] for i in range(n)]
