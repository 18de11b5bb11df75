"""Exact vertex enumeration for small polyhedra given by equalities and <= rows.

Variables are split into a block of nonnegative variables followed by a
block of free variables.  A vertex is pinned by choosing a support for
the nonnegative block and enough tight inequality rows to make the
resulting square-ish system uniquely solvable; enumerating those choices
visits every vertex (degenerate ones several times, deduplicated).
All arithmetic is exact: rows are cleared to integers once and
eliminated fraction-free.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .linalg import int_rank, scale_row_to_int, solve_unique_int

Row = tuple[list[Fraction], Fraction]  # (coefficients over all variables, rhs)


def enumerate_vertices(
    n_nonneg: int,
    n_free: int,
    equalities: list[Row],
    inequalities: list[Row],
) -> list[tuple[Fraction, ...]]:
    """All vertices of {x >= 0 (first block), eq rows hold, ineq rows <= rhs}."""
    nvars = n_nonneg + n_free
    free_cols = list(range(n_nonneg, nvars))
    eq_int = [scale_row_to_int(coeffs, rhs) for coeffs, rhs in equalities]
    ineq_int = [scale_row_to_int(coeffs, rhs) for coeffs, rhs in inequalities]
    seen: dict[tuple[Fraction, ...], None] = {}

    for size in range(1, n_nonneg + 1):
        for support in combinations(range(n_nonneg), size):
            cols = list(support) + free_cols
            eq_rows = [[coeffs[c] for c in cols] for coeffs, _ in eq_int]
            eq_rank = int_rank(eq_rows)
            needed = len(cols) - eq_rank
            if needed > len(ineq_int):
                continue
            eq_rhs = [rhs for _, rhs in eq_int]
            for tight in combinations(range(len(ineq_int)), needed):
                rows = list(eq_rows)
                rhs = list(eq_rhs)
                for t in tight:
                    coeffs, b = ineq_int[t]
                    rows.append([coeffs[c] for c in cols])
                    rhs.append(b)
                solution = solve_unique_int(rows, rhs, len(cols))
                if solution is None:
                    continue
                if any(solution[k] < 0 for k in range(size)):
                    continue
                point = [Fraction(0)] * nvars
                for c, v in zip(cols, solution):
                    point[c] = v
                key = tuple(point)
                if key in seen:
                    continue
                ok = True
                for coeffs, b in ineq_int:
                    total = sum(
                        coeffs[c] * point[c] for c in cols if coeffs[c] and point[c]
                    )
                    if total > b:
                        ok = False
                        break
                if ok:
                    seen[key] = None
    return list(seen)
