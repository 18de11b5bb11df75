"""Exact solutions of zero-sum matrix games.

`solve` is the engine of record (exact-rational LP with certificates);
`enumerate_minimax` lists every extreme optimal strategy of one side;
the indifference, inverse-matrix and diagonal shortcuts are provided as
independently checkable special-purpose techniques.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import dominance
from .linalg import invert, solve_unique
from .matrices import PayoffMatrix, payoffs_vs_columns, payoffs_vs_rows
from .polytope import enumerate_vertices
from .simplex import simplex_max
from .strategies import HostLambdaStrategy, MixedStrategy


class ExactSolveError(ValueError):
    """A special-purpose technique failed or produced an invalid result."""


class SingularSystemError(ExactSolveError):
    pass


class NonSimplexSolutionError(ExactSolveError):
    """The hypothesized solution left the probability simplex."""


@dataclass(frozen=True)
class ZeroSumSolution:
    """Game value with one optimal pair and replayable guarantee certificates."""

    value: Fraction
    contestant_optimal: MixedStrategy
    host_optimal: MixedStrategy
    contestant_guarantees: tuple[Fraction, ...]  # p.M, one entry per column
    host_caps: tuple[Fraction, ...]  # M.q, one entry per row

    def to_json_dict(self) -> dict:
        return {
            "value": str(self.value),
            "contestant_optimal": self.contestant_optimal.to_json_dict(),
            "host_optimal": self.host_optimal.to_json_dict(),
            "certificate": {
                "contestant_guarantees": [str(v) for v in self.contestant_guarantees],
                "host_caps": [str(v) for v in self.host_caps],
            },
        }


@dataclass(frozen=True)
class MinimaxSet:
    """Extreme points of one side's optimal-strategy polytope."""

    side: str
    vertices: tuple[MixedStrategy, ...]


@dataclass(frozen=True)
class MinimaxCheck:
    is_minimax: bool
    value: Fraction
    worst_case: Fraction


def _certified(
    matrix: PayoffMatrix, value: Fraction, p: MixedStrategy, q: MixedStrategy
) -> ZeroSumSolution:
    """Assemble a solution, verifying both guarantee certificates exactly."""
    guarantees = payoffs_vs_columns(p, matrix)
    caps = payoffs_vs_rows(matrix, q)
    if min(guarantees) != value or max(caps) != value:
        raise ExactSolveError(
            "certificate check failed: the candidate pair does not guarantee "
            f"the claimed value {value}"
        )
    return ZeroSumSolution(value, p, q, guarantees, caps)


def solve(matrix: PayoffMatrix) -> ZeroSumSolution:
    """Exact value and one optimal pair, by LP over the shifted-positive game.

    The row player maximizes the minimum column payoff.  Ties inside the
    simplex iterations are broken by canonical label order, so the returned
    pair is deterministic.
    """
    lowest = min(min(row) for row in matrix.entries)
    shift = 1 - lowest if lowest <= 0 else Fraction(0)
    shifted = matrix.shifted(shift)
    m, n = matrix.shape
    # max 1.y  s.t.  shifted y <= 1, y >= 0; duals give the row player.
    total, y, duals = simplex_max(
        [Fraction(1)] * n,
        [list(row) for row in shifted.entries],
        [Fraction(1)] * m,
    )
    value = 1 / total - shift
    q = MixedStrategy(matrix.col_labels, tuple(v / total for v in y))
    p = MixedStrategy(matrix.row_labels, tuple(v / total for v in duals))
    return _certified(matrix, value, p, q)


def game_value(matrix: PayoffMatrix) -> Fraction:
    return solve(matrix).value


def is_minimax(matrix: PayoffMatrix, strategy: MixedStrategy, side: str) -> MinimaxCheck:
    """Does this strategy guarantee the game value against every pure reply?"""
    value = solve(matrix).value
    if side == "contestant":
        if strategy.labels != matrix.row_labels:
            raise ValueError("strategy labels do not match the matrix rows")
        worst = min(payoffs_vs_columns(strategy, matrix))
    elif side == "host":
        if strategy.labels != matrix.col_labels:
            raise ValueError("strategy labels do not match the matrix columns")
        worst = max(payoffs_vs_rows(matrix, strategy))
    else:
        raise ValueError(f"side must be 'contestant' or 'host', got {side!r}")
    return MinimaxCheck(worst == value, value, worst)


def enumerate_minimax(matrix: PayoffMatrix, side: str) -> MinimaxSet:
    """All extreme points of one side's optimal-strategy polytope.

    Vertex enumeration over the exact system {simplex constraints, payoff
    guarantee rows}.  Columns (rows) used by a known optimal opponent
    strategy are tight for every optimal point (complementary slackness),
    which prunes the active-set search considerably.
    """
    if side not in ("contestant", "host"):
        raise ValueError(f"side must be 'contestant' or 'host', got {side!r}")
    sol = solve(matrix)
    v = sol.value
    m, n = matrix.shape
    if side == "contestant":
        size = m
        labels = matrix.row_labels
        forced = set(sol.host_optimal.support())
        lines = {
            c: [matrix.entries[i][j] for i in range(m)]
            for j, c in enumerate(matrix.col_labels)
        }
        # p.M >= v per column; tight columns become equalities.
        equalities = [([Fraction(1)] * m, Fraction(1))]
        inequalities = []
        for c, coeffs in lines.items():
            if c in forced:
                equalities.append((coeffs, v))
            else:
                inequalities.append(([-x for x in coeffs], -v))
    else:
        size = n
        labels = matrix.col_labels
        forced = set(sol.contestant_optimal.support())
        equalities = [([Fraction(1)] * n, Fraction(1))]
        inequalities = []
        for r, row in zip(matrix.row_labels, matrix.entries):
            if r in forced:
                equalities.append((list(row), v))
            else:
                inequalities.append((list(row), v))
    points = enumerate_vertices(size, 0, equalities, inequalities)
    vertices = sorted(points)
    return MinimaxSet(
        side, tuple(MixedStrategy(labels, tuple(pt)) for pt in vertices)
    )


def solve_by_indifference(matrix: PayoffMatrix) -> ZeroSumSolution:
    """Equalizer solution of a square game hypothesized to be fully mixed.

    Solves p.M = v.1 and M.q = v.1 with the simplex normalizations; raises
    SingularSystemError when either linear system is not uniquely solvable
    and NonSimplexSolutionError when a probability comes out negative
    (the full-support hypothesis was wrong).
    """
    m, n = matrix.shape
    if m != n:
        raise ValueError("indifference technique needs a square matrix")
    # Unknowns (p_1..p_m, v): column equalization plus normalization.
    a = [
        [matrix.entries[i][j] for i in range(m)] + [Fraction(-1)]
        for j in range(n)
    ]
    a.append([Fraction(1)] * m + [Fraction(0)])
    rhs = [Fraction(0)] * n + [Fraction(1)]
    p_sol = solve_unique(a, rhs)
    if p_sol is None:
        raise SingularSystemError("column-equalizer system is singular")
    a = [list(row) + [Fraction(-1)] for row in matrix.entries]
    a.append([Fraction(1)] * n + [Fraction(0)])
    q_sol = solve_unique(a, rhs)
    if q_sol is None:
        raise SingularSystemError("row-equalizer system is singular")
    value = p_sol[-1]
    if q_sol[-1] != value:
        raise ExactSolveError("the two equalizer systems disagree on the value")
    if any(x < 0 for x in p_sol[:-1]) or any(x < 0 for x in q_sol[:-1]):
        raise NonSimplexSolutionError(
            "equalizer solution has a negative probability; "
            "the game has no fully mixed solution"
        )
    p = MixedStrategy(matrix.row_labels, tuple(p_sol[:-1]))
    q = MixedStrategy(matrix.col_labels, tuple(q_sol[:-1]))
    return _certified(matrix, value, p, q)


def solve_by_inverse(matrix: PayoffMatrix) -> ZeroSumSolution:
    """Closed-form solution of a square nonsingular game: value 1/(1.M^-1.1).

    A pedagogical shortcut, cross-checked against `solve` and rejected if
    the formula's output is not a genuine optimal pair.
    """
    m, n = matrix.shape
    if m != n:
        raise ValueError("inverse-matrix technique needs a square matrix")
    inv = invert([list(row) for row in matrix.entries])
    if inv is None:
        raise SingularSystemError("matrix is singular")
    denom = sum(sum(row) for row in inv)
    if denom == 0:
        raise ExactSolveError("inverse formula denominator is zero")
    value = 1 / denom
    p_raw = [sum(inv[i][j] for i in range(m)) for j in range(m)]  # 1.M^-1
    q_raw = [sum(row) for row in inv]  # M^-1.1
    p_probs = tuple(value * x for x in p_raw)
    q_probs = tuple(value * x for x in q_raw)
    if any(x < 0 for x in p_probs) or any(x < 0 for x in q_probs):
        raise NonSimplexSolutionError("inverse formula left the simplex")
    p = MixedStrategy(matrix.row_labels, p_probs)
    q = MixedStrategy(matrix.col_labels, q_probs)
    reference = solve(matrix)
    if reference.value != value:
        raise ExactSolveError(
            f"inverse formula value {value} disagrees with the LP value "
            f"{reference.value}"
        )
    return _certified(matrix, value, p, q)


def solve_diagonal(entries: list[Fraction]) -> Fraction:
    """Value of the diagonal game diag(d_1..d_n): (sum of 1/d_i)^-1.

    Requires every entry nonzero and all of one sign; cross-checked against
    the LP on the corresponding diagonal matrix.
    """
    entries = [Fraction(e) for e in entries]
    if not entries:
        raise ValueError("need at least one diagonal entry")
    if any(e == 0 for e in entries):
        raise ValueError("diagonal formula requires nonzero entries")
    if not (all(e > 0 for e in entries) or all(e < 0 for e in entries)):
        raise ValueError("diagonal formula requires entries of one sign")
    value = 1 / sum(1 / e for e in entries)
    n = len(entries)
    matrix = PayoffMatrix.build(
        tuple(f"r{i+1}" for i in range(n)),
        tuple(f"c{j+1}" for j in range(n)),
        [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)],
    )
    if solve(matrix).value != value:
        raise ExactSolveError("diagonal formula disagrees with the LP value")
    return value


def host_lambda_vertices() -> tuple[MixedStrategy, ...]:
    """The eight extreme host mixtures: lambda coordinates in {0, 1}^3."""
    return tuple(
        HostLambdaStrategy.of(a, b, c).expand()
        for a, b, c in product((0, 1), repeat=3)
    )


@dataclass(frozen=True)
class FullSupportReport:
    """Outcome of the dominated-strategies exclusion check against one host mixture."""

    fully_supported: bool
    best_response_value: Fraction
    dominated_payoffs: dict[str, Fraction]
    attainers: tuple[str, ...]  # dominated rows reaching the best-response value

    @property
    def exclusion_holds(self) -> bool:
        return self.fully_supported and not self.attainers


def verify_full_support_exclusion(
    matrix: PayoffMatrix, host_strategy: MixedStrategy
) -> FullSupportReport:
    """Check that no weakly dominated row attains the best-response value.

    Against a fully supported host mixture every weakly dominated row must
    fall strictly short of the best response; against partially supported
    mixtures dominated rows can tie, and the report lists those that do.
    """
    payoffs = payoffs_vs_rows(matrix, host_strategy)
    best = max(payoffs)
    dominated = {rel.dominated for rel in dominance.find_dominated(matrix, "row", "weak")}
    by_label = dict(zip(matrix.row_labels, payoffs))
    dominated_payoffs = {label: by_label[label] for label in matrix.row_labels if label in dominated}
    attainers = tuple(l for l, v in dominated_payoffs.items() if v == best)
    return FullSupportReport(
        fully_supported=host_strategy.is_fully_supported(),
        best_response_value=best,
        dominated_payoffs=dominated_payoffs,
        attainers=attainers,
    )
