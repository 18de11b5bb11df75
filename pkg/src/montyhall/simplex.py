"""Exact-rational simplex for small LPs in the form max c·x, Ax <= b, x >= 0.

Bland's rule everywhere (lowest eligible index enters, lowest-index basic
variable leaves on ratio ties), so runs terminate and are reproducible:
ties are broken by the canonical ordering of the variables.
"""

from __future__ import annotations

from fractions import Fraction


class UnboundedError(ArithmeticError):
    pass


def simplex_max(
    objective: list[Fraction], a: list[list[Fraction]], b: list[Fraction]
) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    """Maximize objective·x subject to a x <= b, x >= 0, with b >= 0.

    Returns (optimal value, primal solution x, dual solution y).  The
    nonnegative right-hand side makes the slack basis feasible, so no
    phase-1 is needed.
    """
    m, n = len(a), len(objective)
    if any(rhs < 0 for rhs in b):
        raise ValueError("right-hand side must be nonnegative")
    tableau = [
        [Fraction(v) for v in a[i]]
        + [Fraction(1 if k == i else 0) for k in range(m)]
        + [Fraction(b[i])]
        for i in range(m)
    ]
    reduced = [Fraction(v) for v in objective] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))

    while True:
        enter = next((j for j in range(n + m) if reduced[j] > 0), None)
        if enter is None:
            break
        leave_row = None
        best_ratio = None
        for i in range(m):
            coef = tableau[i][enter]
            if coef > 0:
                ratio = tableau[i][-1] / coef
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leave_row])
                ):
                    best_ratio = ratio
                    leave_row = i
        if leave_row is None:
            raise UnboundedError("linear program is unbounded")
        pivot = tableau[leave_row][enter]
        tableau[leave_row] = [v / pivot for v in tableau[leave_row]]
        for i in range(m):
            if i != leave_row and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [
                    v - f * p for v, p in zip(tableau[i], tableau[leave_row])
                ]
        f = reduced[enter]
        reduced = [v - f * p for v, p in zip(reduced, tableau[leave_row])]
        basis[leave_row] = enter

    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = tableau[i][-1]
    duals = [-reduced[n + i] for i in range(m)]
    return -reduced[-1], x, duals
