"""Monte Carlo playout of mixed-strategy profiles against the exact algebra.

Reproducibility contract: sampling uses Python's Mersenne Twister
(`random.Random`) seeded with the string "{seed}/{shard}/{role}" (WHICH
the stdlib hashes with SHA-512, version-2 seeding), one independent
stream per player per shard.  Pure strategies are drawn by exact
inverse-CDF: a 64-bit draw r selects the first index whose cumulative
probability exceeds r/2^64, compared in integer arithmetic, so the
sampled law is exactly the requested rational mixture.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import lcm, sqrt

from .game import (
    CONTESTANT_LABELS,
    CONTESTANT_STRATEGIES,
    HOST_LABELS,
    HOST_STRATEGIES,
    play,
)
from .matrices import build_contestant_matrix, expected_payoff
from .strategies import MixedStrategy

_RESOLUTION = 1 << 64


@dataclass(frozen=True)
class SimConfig:
    trials: int
    seed: int
    contestant: MixedStrategy
    host: MixedStrategy

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.contestant.labels != CONTESTANT_LABELS:
            raise ValueError("contestant strategy must use the canonical 12 labels")
        if self.host.labels != HOST_LABELS:
            raise ValueError("host strategy must use the canonical 6 labels")


@dataclass(frozen=True)
class SimResult:
    wins: int
    trials: int
    empirical_rate: Fraction
    exact_rate: Fraction
    z_score: float | None

    def to_json_dict(self) -> dict:
        return {
            "wins": self.wins,
            "trials": self.trials,
            "empirical_rate": str(self.empirical_rate),
            "exact_rate": str(self.exact_rate),
            "empirical_rate_float": float(self.empirical_rate),
            "exact_rate_float": float(self.exact_rate),
            "z_score": self.z_score,
        }


class ExactSampler:
    """Exact inverse-CDF sampling of one mixed strategy from 64-bit draws."""

    def __init__(self, strategy: MixedStrategy, rng: random.Random):
        self.rng = rng
        denom = lcm(*(p.denominator for p in strategy.probs))
        cumulative = 0
        self.thresholds = []
        for p in strategy.probs:
            cumulative += int(p * denom)
            self.thresholds.append(cumulative << 64)
        self.denom = denom

    def draw(self) -> int:
        r = self.rng.getrandbits(64) * self.denom
        return bisect_right(self.thresholds, r)


def _win_table() -> list[list[bool]]:
    return [
        [play(h, c).contestant_wins for h in HOST_STRATEGIES]
        for c in CONTESTANT_STRATEGIES
    ]


def run(config: SimConfig, shards: int = 1) -> SimResult:
    """Sample `trials` independent shows and compare against the exact rate.

    Trials are split across `shards` independent substreams; the merged
    count does not depend on the order in which shards are run.
    """
    if shards < 1:
        raise ValueError("shards must be at least 1")
    wins_by_profile = _win_table()
    wins = 0
    base, extra = divmod(config.trials, shards)
    for shard in range(shards):
        contestant = ExactSampler(
            config.contestant,
            random.Random(f"{config.seed}/{shard}/contestant"),
        )
        host = ExactSampler(
            config.host, random.Random(f"{config.seed}/{shard}/host")
        )
        for _ in range(base + (1 if shard < extra else 0)):
            if wins_by_profile[contestant.draw()][host.draw()]:
                wins += 1
    exact = expected_payoff(config.contestant, build_contestant_matrix(), config.host)
    empirical = Fraction(wins, config.trials)
    if 0 < exact < 1:
        sigma = sqrt(float(exact * (1 - exact)) / config.trials)
        z: float | None = (float(empirical) - float(exact)) / sigma
    else:
        z = None
    return SimResult(wins, config.trials, empirical, exact, z)


def sigma_for(exact_rate: Fraction, trials: int) -> float:
    """Standard deviation of the empirical win rate at the exact rate."""
    return sqrt(float(exact_rate * (1 - exact_rate)) / trials)
