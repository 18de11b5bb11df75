from fractions import Fraction

import pytest

from montyhall.matrices import build_contestant_matrix, reduced_switch_matrix


# The 12x6 win table, transcribed entry by entry from the worked source
# tables; kept literal here so generator bugs cannot hide.
GOLDEN_WIN_ROWS = {
    "1SS": (0, 0, 1, 1, 1, 1),
    "1SN": (0, 1, 0, 0, 1, 1),
    "1NS": (1, 0, 1, 1, 0, 0),
    "1NN": (1, 1, 0, 0, 0, 0),
    "2SS": (1, 1, 0, 0, 1, 1),
    "2SN": (0, 0, 0, 1, 1, 1),
    "2NS": (1, 1, 1, 0, 0, 0),
    "2NN": (0, 0, 1, 1, 0, 0),
    "3SS": (1, 1, 1, 1, 0, 0),
    "3SN": (0, 0, 1, 1, 0, 1),
    "3NS": (1, 1, 0, 0, 1, 0),
    "3NN": (0, 0, 0, 0, 1, 1),
}


@pytest.fixture(scope="session")
def win_matrix():
    return build_contestant_matrix()


@pytest.fixture(scope="session")
def reduced3():
    return reduced_switch_matrix()


@pytest.fixture(scope="session")
def two_thirds():
    return Fraction(2, 3)
