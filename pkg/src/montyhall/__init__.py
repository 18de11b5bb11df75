"""Exact game-theory engine for the Monty Hall show.

Core building blocks are importable from the package root; the CLI
(`montyhall.cli`) and the HTTP service (`montyhall.service`) are imported
on demand so that the solver stack stays dependency-light.
"""

from .game import (
    CONTESTANT_LABELS,
    CONTESTANT_STRATEGIES,
    DOORS,
    HOST_LABELS,
    HOST_STRATEGIES,
    Action,
    ContestantPureStrategy,
    HostPureStrategy,
    Playout,
    Side,
    play,
    side_of,
)
from .matrices import (
    Bimatrix,
    PayoffMatrix,
    build_contestant_matrix,
    build_host_matrix,
    exchangeability_extend,
    expected_payoff,
    reduced_switch_matrix,
)
from .strategies import HostLambdaStrategy, MixedStrategy, uniform_switch

__version__ = "0.1.0"

__all__ = [
    "Action",
    "Bimatrix",
    "CONTESTANT_LABELS",
    "CONTESTANT_STRATEGIES",
    "ContestantPureStrategy",
    "DOORS",
    "HOST_LABELS",
    "HOST_STRATEGIES",
    "HostLambdaStrategy",
    "HostPureStrategy",
    "MixedStrategy",
    "PayoffMatrix",
    "Playout",
    "Side",
    "build_contestant_matrix",
    "build_host_matrix",
    "exchangeability_extend",
    "expected_payoff",
    "play",
    "reduced_switch_matrix",
    "side_of",
    "uniform_switch",
]
