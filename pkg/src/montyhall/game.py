"""Doors, pure strategies and the deterministic playout of one Monty Hall show.

The show has four moves: the host hides the car behind one of doors 1..3
(kept secret), the contestant picks a door and announces it, the host opens
one of the two other doors (never the car, never the pick), and the
contestant finally switches to the remaining closed door or stays put.
She wins if her final choice hides the car.

Doors are numbered 1, 2, 3 left to right.  Once the contestant has picked
door Y, the two doors distinct from Y are called Left and Right in
left-to-right order; both players' second-stage plans are expressed in
terms of that relative labelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

DOORS = (1, 2, 3)


class Side(str, Enum):
    """Relative position of a non-picked door: Left or Right of the pick."""

    LEFT = "L"
    RIGHT = "R"


class Action(str, Enum):
    """Second-stage decision: switch to the other closed door, or stay."""

    SWITCH = "S"
    NOTSWITCH = "N"


def _check_door(door: int) -> int:
    if door not in DOORS:
        raise ValueError(f"door must be 1, 2 or 3, got {door!r}")
    return door


def other_doors(pick: int) -> tuple[int, int]:
    """The two doors distinct from `pick`, as (left, right)."""
    _check_door(pick)
    a, b = sorted(d for d in DOORS if d != pick)
    return a, b


def side_of(pick: int, other: int) -> Side:
    """Which side of `pick` the door `other` sits on (must differ from pick)."""
    _check_door(other)
    left, right = other_doors(pick)
    if other == left:
        return Side.LEFT
    if other == right:
        return Side.RIGHT
    raise ValueError(f"door {other} is the pick itself, it has no side")


def door_on_side(pick: int, side: Side) -> int:
    """Inverse of side_of: the door sitting on `side` of `pick`."""
    left, right = other_doors(pick)
    return left if side is Side.LEFT else right


@dataclass(frozen=True, order=True)
class HostPureStrategy:
    """A car door plus the side the host opens when the contestant's pick matches.

    On a mismatch the host has no freedom: the single door that is neither
    the pick nor the car is opened and `match_reveal` is ignored.
    """

    car_door: int
    match_reveal: Side

    def __post_init__(self) -> None:
        _check_door(self.car_door)

    @property
    def label(self) -> str:
        return f"{self.car_door}{self.match_reveal.value}"

    @classmethod
    def from_label(cls, label: str) -> "HostPureStrategy":
        if len(label) != 2 or label[0] not in "123" or label[1] not in "LR":
            raise ValueError(f"bad host strategy label {label!r}")
        return cls(int(label[0]), Side(label[1]))

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True, order=True)
class ContestantPureStrategy:
    """An initial pick plus one switch/stay action per revealed side.

    In the label, the first action letter applies when the Left door is
    revealed and the second when the Right door is revealed: 1NS picks
    door 1, stays if Left is opened and switches if Right is opened.
    """

    pick: int
    on_left_revealed: Action
    on_right_revealed: Action

    def __post_init__(self) -> None:
        _check_door(self.pick)

    @property
    def label(self) -> str:
        return f"{self.pick}{self.on_left_revealed.value}{self.on_right_revealed.value}"

    @classmethod
    def from_label(cls, label: str) -> "ContestantPureStrategy":
        if (
            len(label) != 3
            or label[0] not in "123"
            or label[1] not in "SN"
            or label[2] not in "SN"
        ):
            raise ValueError(f"bad contestant strategy label {label!r}")
        return cls(int(label[0]), Action(label[1]), Action(label[2]))

    def action_on(self, side: Side) -> Action:
        return self.on_left_revealed if side is Side.LEFT else self.on_right_revealed

    def __str__(self) -> str:
        return self.label


# Canonical orderings.  All matrices, mixed strategies and wire formats
# index into these tuples, so everything downstream is label-stable.
HOST_STRATEGIES: tuple[HostPureStrategy, ...] = tuple(
    HostPureStrategy(door, side) for door in DOORS for side in (Side.LEFT, Side.RIGHT)
)
CONTESTANT_STRATEGIES: tuple[ContestantPureStrategy, ...] = tuple(
    ContestantPureStrategy(door, first, second)
    for door in DOORS
    for first, second in (
        (Action.SWITCH, Action.SWITCH),
        (Action.SWITCH, Action.NOTSWITCH),
        (Action.NOTSWITCH, Action.SWITCH),
        (Action.NOTSWITCH, Action.NOTSWITCH),
    )
)
HOST_LABELS: tuple[str, ...] = tuple(s.label for s in HOST_STRATEGIES)
CONTESTANT_LABELS: tuple[str, ...] = tuple(s.label for s in CONTESTANT_STRATEGIES)


@dataclass(frozen=True)
class Playout:
    """Complete record of one show played under a pure-strategy profile."""

    car_door: int
    pick: int
    revealed: int
    revealed_side: Side
    final_choice: int
    contestant_wins: bool

    def to_json_dict(self) -> dict:
        return {
            "car_door": self.car_door,
            "pick": self.pick,
            "revealed": self.revealed,
            "revealed_side": self.revealed_side.value,
            "final_choice": self.final_choice,
            "contestant_wins": self.contestant_wins,
        }


def reveal_for(host: HostPureStrategy, pick: int) -> tuple[int, Side]:
    """The door the host opens against `pick`, with its side relative to the pick.

    On a match the host's declared side preference applies; on a mismatch
    the reveal is forced to the unique door that is neither pick nor car.
    """
    if pick == host.car_door:
        door = door_on_side(pick, host.match_reveal)
        return door, host.match_reveal
    (door,) = [d for d in DOORS if d != pick and d != host.car_door]
    return door, side_of(pick, door)


def play(host: HostPureStrategy, contestant: ContestantPureStrategy) -> Playout:
    """Play one show deterministically and return the full playout record."""
    pick = contestant.pick
    revealed, revealed_side = reveal_for(host, pick)
    action = contestant.action_on(revealed_side)
    if action is Action.SWITCH:
        (final_choice,) = [d for d in DOORS if d != pick and d != revealed]
    else:
        final_choice = pick
    return Playout(
        car_door=host.car_door,
        pick=pick,
        revealed=revealed,
        revealed_side=revealed_side,
        final_choice=final_choice,
        contestant_wins=final_choice == host.car_door,
    )
