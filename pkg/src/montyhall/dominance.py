"""Dominance detection, iterated elimination with a replayable trace, and
the reveal-blind win-set comparison of contestant plans.

Row dominance is judged from the row player's view (higher is better);
column dominance from the host's view in the zero-sum reading (lower is
better).  Weak dominance means at-least-as-good everywhere and strictly
better somewhere; elimination under the weak kind also drops exact
duplicates, keeping the lower canonical label, which is what lets the
pairwise-identical reveal columns collapse after the row stage.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .game import (
    DOORS,
    ContestantPureStrategy,
    HostPureStrategy,
    Side,
    play,
)
from .matrices import PayoffMatrix


@dataclass(frozen=True)
class DominanceRelation:
    dominator: str
    dominated: str
    kind: str  # "strict" or "weak"
    witness: str | None  # coordinate with strict inequality; None when strict everywhere


@dataclass(frozen=True)
class EliminationStep:
    step: int
    axis: str  # "row" or "column"
    eliminated: str
    dominator: str
    kind: str  # "strict", "weak" or "duplicate"


@dataclass(frozen=True)
class EliminationTrace:
    steps: tuple[EliminationStep, ...]
    surviving_rows: tuple[str, ...]
    surviving_cols: tuple[str, ...]
    reduced: PayoffMatrix

    def to_json_dict(self) -> dict:
        return {
            "steps": [
                {
                    "step": s.step,
                    "axis": s.axis,
                    "eliminated": s.eliminated,
                    "dominator": s.dominator,
                    "kind": s.kind,
                }
                for s in self.steps
            ],
            "surviving_rows": list(self.surviving_rows),
            "surviving_cols": list(self.surviving_cols),
            "reduced": self.reduced.to_json_dict(),
        }

    def to_text(self) -> str:
        lines = []
        for s in self.steps:
            lines.append(
                f"step {s.step}: drop {s.axis} {s.eliminated} "
                f"({s.kind} vs {s.dominator})"
            )
        if not lines:
            lines.append("no eliminations")
        lines.append(f"surviving rows: {', '.join(self.surviving_rows)}")
        lines.append(f"surviving columns: {', '.join(self.surviving_cols)}")
        lines.append("")
        lines.append(self.reduced.to_text_table())
        return "\n".join(lines)


def _vectors(matrix: PayoffMatrix, axis: str) -> tuple[tuple[str, ...], list[tuple[Fraction, ...]]]:
    if axis == "row":
        return matrix.row_labels, [tuple(r) for r in matrix.entries]
    if axis == "column":
        return matrix.col_labels, [matrix.column(c) for c in matrix.col_labels]
    raise ValueError(f"axis must be 'row' or 'column', got {axis!r}")


def _dominates(
    a: tuple[Fraction, ...], b: tuple[Fraction, ...], axis: str, kind: str
) -> int | None:
    """Index of a strictness witness if a dominates b, -1 for strict, None if not."""
    # Rows are payoffs to a maximizer, columns losses to the minimizing host.
    better = (lambda x, y: x > y) if axis == "row" else (lambda x, y: x < y)
    not_worse = (lambda x, y: x >= y) if axis == "row" else (lambda x, y: x <= y)
    if kind == "strict":
        return -1 if all(better(x, y) for x, y in zip(a, b)) else None
    if kind != "weak":
        raise ValueError(f"kind must be 'strict' or 'weak', got {kind!r}")
    if not all(not_worse(x, y) for x, y in zip(a, b)):
        return None
    for i, (x, y) in enumerate(zip(a, b)):
        if better(x, y):
            return i
    return None  # equal vectors: not weak dominance


def find_dominated(matrix: PayoffMatrix, axis: str, kind: str) -> list[DominanceRelation]:
    """Every ordered pair (dominator, dominated) on the given axis."""
    labels, vectors = _vectors(matrix, axis)
    coord_labels = matrix.col_labels if axis == "row" else matrix.row_labels
    relations = []
    for i, a in enumerate(vectors):
        for j, b in enumerate(vectors):
            if i == j:
                continue
            witness = _dominates(a, b, axis, kind)
            if witness is None:
                continue
            relations.append(
                DominanceRelation(
                    dominator=labels[i],
                    dominated=labels[j],
                    kind=kind,
                    witness=None if witness == -1 else coord_labels[witness],
                )
            )
    return relations


def _find_elimination(
    matrix: PayoffMatrix, axis: str, kind: str
) -> tuple[str, str, str] | None:
    """Lowest-canonical-index eliminable strategy on an axis, with its dominator.

    Under the weak kind a strategy is eliminable when some other strategy
    weakly dominates it, or duplicates it with a lower canonical index.
    """
    labels, vectors = _vectors(matrix, axis)
    for j, b in enumerate(vectors):
        for i, a in enumerate(vectors):
            if i == j:
                continue
            witness = _dominates(a, b, axis, kind)
            if witness is not None:
                return labels[j], labels[i], kind
            if kind == "weak" and a == b and i < j:
                return labels[j], labels[i], "duplicate"
    return None


def eliminate(
    matrix: PayoffMatrix, policy: str = "rows_then_columns", kind: str = "weak"
) -> EliminationTrace:
    """Iterated elimination of dominated strategies with a full trace.

    Deterministic: at each step the eliminable strategy with the lowest
    canonical index goes first.  `rows_then_columns` exhausts row
    eliminations before touching columns (repeating if columns expose new
    row dominance); `fixpoint` rechecks both axes at every step.
    """
    if policy not in ("rows_then_columns", "fixpoint"):
        raise ValueError(f"unknown policy {policy!r}")
    current = matrix
    steps: list[EliminationStep] = []

    def drop(axis: str, label: str) -> None:
        nonlocal current
        rows = [r for r in current.row_labels if axis != "row" or r != label]
        cols = [c for c in current.col_labels if axis != "column" or c != label]
        current = current.submatrix(rows, cols)

    def exhaust(axis: str) -> None:
        while True:
            found = _find_elimination(current, axis, kind)
            if found is None:
                return
            eliminated, dominator, step_kind = found
            steps.append(
                EliminationStep(len(steps) + 1, axis, eliminated, dominator, step_kind)
            )
            drop(axis, eliminated)

    if policy == "rows_then_columns":
        exhaust("row")
        exhaust("column")
    else:
        while True:
            before = len(steps)
            exhaust("row")
            exhaust("column")
            if len(steps) == before:
                break

    return EliminationTrace(
        steps=tuple(steps),
        surviving_rows=current.row_labels,
        surviving_cols=current.col_labels,
        reduced=current,
    )


@dataclass(frozen=True)
class WinSetComparison:
    relation: str  # "a_dominates", "b_dominates", "incomparable" or "equal"
    win_set_a: frozenset[int]
    win_set_b: frozenset[int]


def win_set(strategy: ContestantPureStrategy | str) -> frozenset[int]:
    """Car doors this plan wins for no matter which door the host opens."""
    if isinstance(strategy, str):
        strategy = ContestantPureStrategy.from_label(strategy)
    doors = []
    for car in DOORS:
        if all(
            play(HostPureStrategy(car, side), strategy).contestant_wins
            for side in (Side.LEFT, Side.RIGHT)
        ):
            doors.append(car)
    return frozenset(doors)


def win_set_compare(
    a: ContestantPureStrategy | str, b: ContestantPureStrategy | str
) -> WinSetComparison:
    """Compare two contestant plans by their reveal-independent win sets."""
    wa, wb = win_set(a), win_set(b)
    if wa == wb:
        relation = "equal"
    elif wa > wb:
        relation = "a_dominates"
    elif wb > wa:
        relation = "b_dominates"
    else:
        relation = "incomparable"
    return WinSetComparison(relation, wa, wb)
