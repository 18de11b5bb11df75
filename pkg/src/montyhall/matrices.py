"""Payoff matrices over the 12x6 strategy grid and the named bimatrix fixtures.

The contestant's win matrix is generated by exhaustive playout.  The two
non-trivial host personalities (maverick, superstitious) are specified by
golden cells for the four door-1 rows plus the 2SS row; the remaining rows
are filled in by door relabeling, see `exchangeability_extend`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .game import (
    CONTESTANT_LABELS,
    HOST_LABELS,
    ContestantPureStrategy,
    HostPureStrategy,
    Side,
    door_on_side,
    play,
    side_of,
)
from .strategies import MixedStrategy

Rat = Fraction


@dataclass(frozen=True)
class PayoffMatrix:
    """A labelled matrix of exact-rational payoffs (row player maximizes)."""

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.row_labels):
            raise ValueError("row count does not match row labels")
        for row in self.entries:
            if len(row) != len(self.col_labels):
                raise ValueError("column count does not match column labels")

    @classmethod
    def build(cls, row_labels, col_labels, values) -> "PayoffMatrix":
        return cls(
            tuple(row_labels),
            tuple(col_labels),
            tuple(tuple(Fraction(v) for v in row) for row in values),
        )

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    def entry(self, row_label: str, col_label: str) -> Fraction:
        return self.entries[self.row_labels.index(row_label)][
            self.col_labels.index(col_label)
        ]

    def row(self, row_label: str) -> tuple[Fraction, ...]:
        return self.entries[self.row_labels.index(row_label)]

    def column(self, col_label: str) -> tuple[Fraction, ...]:
        j = self.col_labels.index(col_label)
        return tuple(row[j] for row in self.entries)

    def submatrix(self, row_labels, col_labels) -> "PayoffMatrix":
        rows = tuple(row_labels)
        cols = tuple(col_labels)
        ri = [self.row_labels.index(r) for r in rows]
        ci = [self.col_labels.index(c) for c in cols]
        return PayoffMatrix(
            rows, cols, tuple(tuple(self.entries[i][j] for j in ci) for i in ri)
        )

    def scaled(self, factor: Fraction) -> "PayoffMatrix":
        f = Fraction(factor)
        return PayoffMatrix(
            self.row_labels,
            self.col_labels,
            tuple(tuple(f * v for v in row) for row in self.entries),
        )

    def shifted(self, offset: Fraction) -> "PayoffMatrix":
        off = Fraction(offset)
        return PayoffMatrix(
            self.row_labels,
            self.col_labels,
            tuple(tuple(v + off for v in row) for row in self.entries),
        )

    def to_json_dict(self) -> dict:
        return {
            "row_labels": list(self.row_labels),
            "col_labels": list(self.col_labels),
            "entries": [[str(v) for v in row] for row in self.entries],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "PayoffMatrix":
        return cls.build(data["row_labels"], data["col_labels"], data["entries"])

    def to_text_table(self) -> str:
        cells = [[""] + list(self.col_labels)]
        for label, row in zip(self.row_labels, self.entries):
            cells.append([label] + [str(v) for v in row])
        widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
        lines = []
        for k, row in enumerate(cells):
            lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
            if k == 0:
                lines.append("-" * len(lines[0]))
        return "\n".join(lines)

    def to_csv(self) -> str:
        lines = ["," + ",".join(self.col_labels)]
        for label, row in zip(self.row_labels, self.entries):
            lines.append(label + "," + ",".join(str(v) for v in row))
        return "\n".join(lines)


@dataclass(frozen=True)
class Bimatrix:
    """Paired contestant/host payoff matrices over identical label grids."""

    contestant: PayoffMatrix
    host: PayoffMatrix

    def __post_init__(self) -> None:
        if (
            self.contestant.row_labels != self.host.row_labels
            or self.contestant.col_labels != self.host.col_labels
        ):
            raise ValueError("bimatrix components must share labels and shape")

    @property
    def row_labels(self) -> tuple[str, ...]:
        return self.contestant.row_labels

    @property
    def col_labels(self) -> tuple[str, ...]:
        return self.contestant.col_labels

    def entry(self, row_label: str, col_label: str) -> tuple[Fraction, Fraction]:
        return (
            self.contestant.entry(row_label, col_label),
            self.host.entry(row_label, col_label),
        )

    def to_json_dict(self) -> dict:
        return {
            "contestant": self.contestant.to_json_dict(),
            "host": self.host.to_json_dict(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Bimatrix":
        return cls(
            PayoffMatrix.from_json_dict(data["contestant"]),
            PayoffMatrix.from_json_dict(data["host"]),
        )

    def to_text_table(self) -> str:
        cells = [[""] + list(self.col_labels)]
        for label in self.row_labels:
            row = [label]
            for col in self.col_labels:
                c, h = self.entry(label, col)
                row.append(f"({c},{h})")
            cells.append(row)
        widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
        lines = []
        for k, row in enumerate(cells):
            lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
            if k == 0:
                lines.append("-" * len(lines[0]))
        return "\n".join(lines)


def build_contestant_matrix() -> PayoffMatrix:
    """The 12x6 win-indicator matrix: entry 1 iff the contestant wins the show."""
    values = []
    for c_label in CONTESTANT_LABELS:
        contestant = ContestantPureStrategy.from_label(c_label)
        row = []
        for h_label in HOST_LABELS:
            host = HostPureStrategy.from_label(h_label)
            row.append(1 if play(host, contestant).contestant_wins else 0)
        values.append(row)
    return PayoffMatrix.build(CONTESTANT_LABELS, HOST_LABELS, values)


def reduced_switch_matrix() -> PayoffMatrix:
    """The 3x3 game left after dominance reduction: always-switch rows vs Left reveals."""
    rows = ("1SS", "2SS", "3SS")
    cols = ("1L", "2L", "3L")
    return build_contestant_matrix().submatrix(rows, cols)


def expected_payoff(p: MixedStrategy, matrix: PayoffMatrix, q: MixedStrategy) -> Fraction:
    """Exact expected row-player payoff of the profile (p, q)."""
    if p.labels != matrix.row_labels or q.labels != matrix.col_labels:
        raise ValueError("strategy labels do not match the matrix")
    total = Fraction(0)
    for pi, row in zip(p.probs, matrix.entries):
        if pi:
            total += pi * sum(qj * v for qj, v in zip(q.probs, row) if qj)
    return total


def payoffs_vs_columns(p: MixedStrategy, matrix: PayoffMatrix) -> tuple[Fraction, ...]:
    """Row-player expected payoff against each pure column (the vector p·M)."""
    if p.labels != matrix.row_labels:
        raise ValueError("strategy labels do not match the matrix rows")
    cols = len(matrix.col_labels)
    out = [Fraction(0)] * cols
    for pi, row in zip(p.probs, matrix.entries):
        if pi:
            for j in range(cols):
                out[j] += pi * row[j]
    return tuple(out)


def payoffs_vs_rows(matrix: PayoffMatrix, q: MixedStrategy) -> tuple[Fraction, ...]:
    """Row-player expected payoff of each pure row against q (the vector M·q)."""
    if q.labels != matrix.col_labels:
        raise ValueError("strategy labels do not match the matrix columns")
    return tuple(
        sum((qj * v for qj, v in zip(q.probs, row) if qj), Fraction(0))
        for row in matrix.entries
    )


# --- door relabeling -------------------------------------------------------

DOOR_PERMUTATIONS: tuple[dict[int, int], ...] = (
    {1: 1, 2: 2, 3: 3},
    {1: 1, 2: 3, 3: 2},
    {1: 2, 2: 1, 3: 3},
    {1: 2, 2: 3, 3: 1},
    {1: 3, 2: 1, 3: 2},
    {1: 3, 2: 2, 3: 1},
)


def permute_host_label(sigma: dict[int, int], label: str) -> str:
    """Image of a host pure strategy under a door relabeling.

    The side tag is pick-relative, so it is recomputed from door order:
    the relabeled strategy opens the image of the originally opened door.
    """
    s = HostPureStrategy.from_label(label)
    car = sigma[s.car_door]
    revealed = sigma[door_on_side(s.car_door, s.match_reveal)]
    return HostPureStrategy(car, side_of(car, revealed)).label


def permute_contestant_label(sigma: dict[int, int], label: str) -> str:
    """Image of a contestant pure strategy under a door relabeling."""
    s = ContestantPureStrategy.from_label(label)
    pick = sigma[s.pick]
    actions = {}
    for side in (side_of(s.pick, d) for d in (1, 2, 3) if d != s.pick):
        old_door = door_on_side(s.pick, side)
        actions[side_of(pick, sigma[old_door])] = s.action_on(side)
    return ContestantPureStrategy(
        pick, actions[Side.LEFT], actions[Side.RIGHT]
    ).label


class ExchangeabilityError(ValueError):
    """Raised when a partial bimatrix cannot be completed consistently."""


# The door exchanges sending door 1 to doors 2 and 3 while preserving the
# left-to-right order of the other two doors.  Order preservation is what
# lets the printed row labels carry over letter-for-letter.
_EXTENSION_PERMS: dict[int, dict[int, int]] = {
    2: {1: 2, 2: 1, 3: 3},
    3: {1: 3, 2: 1, 3: 2},
}

PartialCells = dict[str, dict[str, tuple[Fraction, Fraction]]]


def exchangeability_extend(partial: PartialCells) -> Bimatrix:
    """Complete a partial (contestant, host) table by door relabeling.

    `partial` maps row label -> column label -> (c, h) and must contain all
    four door-1 rows; rows for doors 2 and 3 are derived by transporting the
    door-1 rows along the order-preserving exchanges above.  Any row present
    in both `partial` and the derived set must agree cell for cell.
    """
    for label in ("1SS", "1SN", "1NS", "1NN"):
        if label not in partial:
            raise ExchangeabilityError(f"partial table is missing row {label}")
    cells: PartialCells = {r: dict(cols) for r, cols in partial.items()}
    for door, sigma in _EXTENSION_PERMS.items():
        col_map = {c: permute_host_label(sigma, c) for c in HOST_LABELS}
        for source in ("1SS", "1SN", "1NS", "1NN"):
            target = permute_contestant_label(sigma, source)
            derived = {col_map[c]: partial[source][c] for c in HOST_LABELS}
            if target in cells:
                for col, value in derived.items():
                    if cells[target].get(col) != value:
                        raise ExchangeabilityError(
                            f"cell ({target}, {col}) disagrees between the given "
                            f"row and its image under the door exchange 1<->{door}"
                        )
            else:
                cells[target] = derived
    missing = [r for r in CONTESTANT_LABELS if r not in cells]
    if missing:
        raise ExchangeabilityError(f"extension left rows unfilled: {missing}")
    c_rows, h_rows = [], []
    for r in CONTESTANT_LABELS:
        c_rows.append([cells[r][c][0] for c in HOST_LABELS])
        h_rows.append([cells[r][c][1] for c in HOST_LABELS])
    return Bimatrix(
        PayoffMatrix.build(CONTESTANT_LABELS, HOST_LABELS, c_rows),
        PayoffMatrix.build(CONTESTANT_LABELS, HOST_LABELS, h_rows),
    )


# --- host personalities ----------------------------------------------------

def _partial(rows: dict[str, list[tuple[int, int]]]) -> PartialCells:
    return {
        r: {c: (Fraction(cv), Fraction(hv)) for c, (cv, hv) in zip(HOST_LABELS, pairs)}
        for r, pairs in rows.items()
    }


# Maverick host: zero-sum toward switchers, but rewarded when the contestant
# adopts a stay-on-Left plan, more so the further left the car is hidden.
MAVERICK_PARTIAL: PartialCells = _partial(
    {
        "1SS": [(0, 0), (0, 0), (1, -1), (1, -1), (1, -1), (1, -1)],
        "1SN": [(0, 0), (1, -1), (0, 0), (0, 0), (1, -1), (1, -1)],
        "1NS": [(1, 4), (0, 4), (1, 3), (1, 3), (0, 2), (0, 2)],
        "1NN": [(1, 5), (1, 4), (0, 3), (0, 3), (0, 2), (0, 2)],
        "2SS": [(1, -1), (1, -1), (0, 0), (0, 0), (1, -1), (1, -1)],
    }
)

# Superstitious antagonist: loses a point whenever the car is won and one
# more for opening the Right door on a match.
SUPERSTITIOUS_PARTIAL: PartialCells = _partial(
    {
        "1SS": [(0, 0), (0, -1), (1, -1), (1, -1), (1, -1), (1, -1)],
        "1SN": [(0, 0), (1, -2), (0, 0), (0, 0), (1, -1), (1, -1)],
        "1NS": [(1, -1), (0, -1), (1, -1), (1, -1), (0, 0), (0, 0)],
        "1NN": [(1, -1), (1, -2), (0, 0), (0, 0), (0, 0), (0, 0)],
        "2SS": [(1, -1), (1, -1), (0, 0), (0, -1), (1, -1), (1, -1)],
    }
)

HOST_KINDS = ("zero_sum", "sympathetic", "indifferent", "maverick", "superstitious")


def build_host_matrix(kind: str) -> Bimatrix:
    """The bimatrix for one of the five host personalities."""
    win = build_contestant_matrix()
    if kind == "zero_sum":
        return Bimatrix(win, win.scaled(Fraction(-1)))
    if kind == "sympathetic":
        return Bimatrix(win, win)
    if kind == "indifferent":
        return Bimatrix(win, win.scaled(Fraction(0)))
    if kind == "maverick":
        bim = exchangeability_extend(MAVERICK_PARTIAL)
    elif kind == "superstitious":
        bim = exchangeability_extend(SUPERSTITIOUS_PARTIAL)
    else:
        raise ValueError(f"unknown host kind {kind!r}; expected one of {HOST_KINDS}")
    if bim.contestant != win:
        raise ExchangeabilityError(
            f"{kind} table disagrees with the generated win matrix"
        )
    return bim


# CLI/API fixture vocabulary.
MATRIX_FIXTURES = ("C", "c3")
BIMATRIX_FIXTURES = {
    "zero-sum": "zero_sum",
    "zero_sum": "zero_sum",
    "alpha": "sympathetic",
    "beta": "indifferent",
    "gamma": "maverick",
    "delta": "superstitious",
}


def get_matrix_fixture(name: str) -> PayoffMatrix:
    if name == "C":
        return build_contestant_matrix()
    if name == "c3":
        return reduced_switch_matrix()
    raise ValueError(f"unknown matrix fixture {name!r}; expected C or c3")


def get_bimatrix_fixture(name: str) -> Bimatrix:
    kind = BIMATRIX_FIXTURES.get(name)
    if kind is None:
        raise ValueError(
            f"unknown bimatrix fixture {name!r}; expected one of "
            f"{sorted(set(BIMATRIX_FIXTURES))}"
        )
    return build_host_matrix(kind)
