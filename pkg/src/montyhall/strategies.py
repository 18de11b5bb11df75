"""Mixed strategies over the canonical pure-strategy lists, exact rationals only."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .game import CONTESTANT_LABELS, HOST_LABELS

_RATIONAL_RE = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse a "p/q" literal; decimal and exponent forms are rejected."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"expected a rational like 2/3, got {text!r}")
    return Fraction(text)


@dataclass(frozen=True)
class MixedStrategy:
    """A probability vector over an ordered list of pure-strategy labels."""

    labels: tuple[str, ...]
    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.probs):
            raise ValueError("labels and probs must have equal length")
        if any(p < 0 for p in self.probs):
            raise ValueError("probabilities must be nonnegative")
        if sum(self.probs, Fraction(0)) != 1:
            raise ValueError("probabilities must sum to exactly 1")

    @classmethod
    def from_mapping(
        cls, labels: tuple[str, ...], weights: dict[str, Fraction]
    ) -> "MixedStrategy":
        unknown = set(weights) - set(labels)
        if unknown:
            raise ValueError(f"unknown labels {sorted(unknown)}")
        return cls(labels, tuple(Fraction(weights.get(l, 0)) for l in labels))

    @classmethod
    def uniform(cls, labels: tuple[str, ...]) -> "MixedStrategy":
        n = len(labels)
        return cls(labels, tuple(Fraction(1, n) for _ in labels))

    @classmethod
    def point_mass(cls, labels: tuple[str, ...], label: str) -> "MixedStrategy":
        if label not in labels:
            raise ValueError(f"{label!r} not among {labels}")
        return cls(labels, tuple(Fraction(1 if l == label else 0) for l in labels))

    def prob_of(self, label: str) -> Fraction:
        return self.probs[self.labels.index(label)]

    def support(self) -> tuple[str, ...]:
        return tuple(l for l, p in zip(self.labels, self.probs) if p > 0)

    def is_fully_supported(self) -> bool:
        return all(p > 0 for p in self.probs)

    def to_json_dict(self) -> dict:
        return {"labels": list(self.labels), "probs": [str(p) for p in self.probs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "MixedStrategy":
        return cls(
            tuple(data["labels"]), tuple(Fraction(p) for p in data["probs"])
        )


@dataclass(frozen=True)
class HostLambdaStrategy:
    """Host mixture family: uniform car placement with per-door Left-reveal odds.

    lambda_X is the conditional probability that the host opens the Left
    door when the car sits behind door X and the contestant's pick matches.
    Expands to the 6-vector
    (l1/3, (1-l1)/3, l2/3, (1-l2)/3, l3/3, (1-l3)/3) over 1L..3R.
    """

    lambda_1: Fraction
    lambda_2: Fraction
    lambda_3: Fraction

    def __post_init__(self) -> None:
        for lam in (self.lambda_1, self.lambda_2, self.lambda_3):
            if not 0 <= lam <= 1:
                raise ValueError(
                    f"lambda coordinates must lie in [0, 1], got {lam}; "
                    "the expansion would not be a probability vector"
                )

    @classmethod
    def of(cls, l1, l2, l3) -> "HostLambdaStrategy":
        return cls(Fraction(l1), Fraction(l2), Fraction(l3))

    def expand(self) -> MixedStrategy:
        third = Fraction(1, 3)
        probs = []
        for lam in (self.lambda_1, self.lambda_2, self.lambda_3):
            probs.append(lam * third)
            probs.append((1 - lam) * third)
        return MixedStrategy(HOST_LABELS, tuple(probs))


def uniform_switch() -> MixedStrategy:
    """The contestant mixture 'pick a door uniformly at random, then switch'."""
    weights = {l: Fraction(1, 3) for l in ("1SS", "2SS", "3SS")}
    return MixedStrategy.from_mapping(CONTESTANT_LABELS, weights)


def host_from_pi_lambda(
    pi: tuple[Fraction, Fraction, Fraction],
    lam: tuple[Fraction, Fraction, Fraction],
) -> MixedStrategy:
    """Host mixture with car-placement marginal `pi` and Left-reveal odds `lam`."""
    pi = tuple(Fraction(x) for x in pi)
    lam = tuple(Fraction(x) for x in lam)
    if any(x < 0 for x in pi) or sum(pi) != 1:
        raise ValueError("pi must be a probability vector over the three doors")
    if any(not 0 <= x <= 1 for x in lam):
        raise ValueError("lambda coordinates must lie in [0, 1]")
    probs = []
    for p, l in zip(pi, lam):
        probs.append(p * l)
        probs.append(p * (1 - l))
    return MixedStrategy(HOST_LABELS, tuple(probs))


def car_marginal(host: MixedStrategy) -> tuple[Fraction, Fraction, Fraction]:
    """Per-door car-placement probabilities of a host mixture (XL + XR weight)."""
    if host.labels != HOST_LABELS:
        raise ValueError("expected a strategy over the canonical host labels")
    return (
        host.probs[0] + host.probs[1],
        host.probs[2] + host.probs[3],
        host.probs[4] + host.probs[5],
    )


def parse_strategy(text: str, side: str) -> MixedStrategy:
    """Parse a CLI/API strategy literal.

    Accepted forms:
      - "P*"                    the uniform always-switch contestant mixture
      - "Q*:1,1,1"              host lambda family, uniform car placement
      - "uniform"               uniform over the side's pure strategies
      - "1SS" / "2L"            a single pure strategy
      - "1SS:1/3,2SS:2/3"       explicit label:probability list
    """
    labels = CONTESTANT_LABELS if side == "contestant" else HOST_LABELS
    text = text.strip()
    if text == "P*":
        if side != "contestant":
            raise ValueError("P* is a contestant strategy")
        return uniform_switch()
    if text.startswith("Q*:"):
        if side != "host":
            raise ValueError("Q* strategies belong to the host")
        parts = [parse_rational(x) for x in text[3:].split(",")]
        if len(parts) != 3:
            raise ValueError("Q* takes three lambda values, e.g. Q*:1/2,1/2,1/2")
        return HostLambdaStrategy(*parts).expand()
    if text == "uniform":
        return MixedStrategy.uniform(labels)
    if text in labels:
        return MixedStrategy.point_mass(labels, text)
    weights: dict[str, Fraction] = {}
    for item in text.split(","):
        label, _, prob = item.partition(":")
        label = label.strip()
        if not prob:
            raise ValueError(f"bad strategy term {item!r}; expected label:prob")
        if label in weights:
            raise ValueError(f"label {label} listed twice")
        weights[label] = parse_rational(prob)
    return MixedStrategy.from_mapping(labels, weights)
