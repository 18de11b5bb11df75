import random
from fractions import Fraction
from itertools import combinations, product

import pytest

from montyhall.game import CONTESTANT_LABELS, HOST_LABELS
from montyhall.matrices import (
    DOOR_PERMUTATIONS,
    PayoffMatrix,
    permute_contestant_label,
    permute_host_label,
)
from montyhall.strategies import HostLambdaStrategy, MixedStrategy, uniform_switch
from montyhall.zerosum import (
    NonSimplexSolutionError,
    SingularSystemError,
    enumerate_minimax,
    host_lambda_vertices,
    is_minimax,
    solve,
    solve_by_indifference,
    solve_by_inverse,
    solve_diagonal,
    verify_full_support_exclusion,
)

P_STAR = uniform_switch()
Q_HALF = MixedStrategy.uniform(HOST_LABELS)
Q_LEFT = HostLambdaStrategy.of(1, 1, 1).expand()


def _mat(rows, values):
    return PayoffMatrix.build(
        tuple(f"r{i+1}" for i in range(rows)),
        tuple(f"c{j+1}" for j in range(len(values[0]))),
        values,
    )


def test_solve_full_game(win_matrix, two_thirds):
    sol = solve(win_matrix)
    assert sol.value == two_thirds
    assert sol.contestant_optimal == P_STAR
    assert min(sol.contestant_guarantees) == two_thirds
    assert max(sol.host_caps) == two_thirds
    assert is_minimax(win_matrix, sol.host_optimal, "host").is_minimax


def test_solve_reduced_game(reduced3, two_thirds):
    sol = solve(reduced3)
    assert sol.value == two_thirds
    assert sol.contestant_optimal.probs == (Fraction(1, 3),) * 3
    assert sol.host_optimal.probs == (Fraction(1, 3),) * 3


def test_solve_single_cell():
    sol = solve(_mat(1, [[5]]))
    assert sol.value == 5
    assert sol.contestant_optimal.probs == (1,)
    assert sol.host_optimal.probs == (1,)


def test_duality_exact_on_seeded_matrices():
    rng = random.Random(20260810)
    for _ in range(8):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        values = [
            [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(cols)]
            for _ in range(rows)
        ]
        sol = solve(_mat(rows, values))
        # max-min equals min-max as exact rationals, certified both ways.
        assert min(sol.contestant_guarantees) == sol.value
        assert max(sol.host_caps) == sol.value


# --- the special-purpose techniques ---------------------------------------


def test_indifference_on_reduced_game(reduced3, two_thirds):
    sol = solve_by_indifference(reduced3)
    assert sol.value == two_thirds
    assert sol.contestant_optimal.probs == (Fraction(1, 3),) * 3
    assert sol.host_optimal.probs == (Fraction(1, 3),) * 3


def test_indifference_on_identity_2x2():
    sol = solve_by_indifference(_mat(2, [[1, 0], [0, 1]]))
    assert sol.value == Fraction(1, 2)
    assert sol.contestant_optimal.probs == (Fraction(1, 2), Fraction(1, 2))


def test_indifference_fails_cleanly_on_saddle_point():
    # Saddle-point game: the equalizer system pushes a probability negative.
    saddle = _mat(2, [[1, 2], [0, 3]])
    assert solve(saddle).value == 1  # direct LP oracle
    with pytest.raises(NonSimplexSolutionError):
        solve_by_indifference(saddle)


def test_indifference_rejects_singular_system():
    with pytest.raises(SingularSystemError):
        solve_by_indifference(_mat(2, [[1, 1], [1, 1]]))


def test_inverse_on_reduced_game(reduced3, two_thirds):
    sol = solve_by_inverse(reduced3)
    assert sol.value == two_thirds
    assert sol.contestant_optimal == solve(reduced3).contestant_optimal


def test_inverse_on_negative_diagonal():
    sol = solve_by_inverse(_mat(3, [[-1, 0, 0], [0, -1, 0], [0, 0, -1]]))
    assert sol.value == Fraction(-1, 3)
    assert sol.contestant_optimal.probs == (Fraction(1, 3),) * 3


def test_inverse_on_scaled_identity():
    sol = solve_by_inverse(_mat(2, [[2, 0], [0, 2]]))
    assert sol.value == 1
    assert sol.contestant_optimal.probs == (Fraction(1, 2), Fraction(1, 2))


def test_inverse_rejects_singular():
    with pytest.raises(SingularSystemError):
        solve_by_inverse(_mat(2, [[1, 1], [1, 1]]))


def test_diagonal_values():
    assert solve_diagonal([-1, -1, -1]) == Fraction(-1, 3)
    assert solve_diagonal([-1, -1, -1]) + 1 == Fraction(2, 3)
    assert solve_diagonal([Fraction(7, 2)]) == Fraction(7, 2)
    assert solve_diagonal([-1, -2, -3]) == Fraction(-6, 11)


def test_diagonal_rejects_bad_input():
    with pytest.raises(ValueError):
        solve_diagonal([1, 0, 2])
    with pytest.raises(ValueError):
        solve_diagonal([1, -1, 2])
    with pytest.raises(ValueError):
        solve_diagonal([])


# --- minimax sets ----------------------------------------------------------


def test_contestant_minimax_is_unique(win_matrix):
    result = enumerate_minimax(win_matrix, "contestant")
    assert result.side == "contestant"
    assert result.vertices == (P_STAR,)


def test_host_minimax_has_eight_vertices(win_matrix):
    result = enumerate_minimax(win_matrix, "host")
    assert len(result.vertices) == 8
    assert set(result.vertices) == set(host_lambda_vertices())


def _oracle_row_optimal_3x3(matrix):
    """Brute-force support enumeration for the row player of a 3x3 game."""
    labels = matrix.row_labels
    candidates = {}
    for size in (1, 2, 3):
        for support in combinations(range(3), size):
            for tight_cols in combinations(range(3), size):
                # equalize the chosen columns over the support, normalize
                from montyhall.linalg import solve_unique

                a = []
                b = []
                for j in tight_cols:
                    a.append([matrix.entries[i][j] for i in support] + [Fraction(-1)])
                    b.append(Fraction(0))
                a.append([Fraction(1)] * size + [Fraction(0)])
                b.append(Fraction(1))
                sol = solve_unique(a, b)
                if sol is None or any(x < 0 for x in sol[:-1]):
                    continue
                probs = [Fraction(0)] * 3
                for i, x in zip(support, sol[:-1]):
                    probs[i] = x
                guarantee = min(
                    sum(p * matrix.entries[i][j] for i, p in enumerate(probs))
                    for j in range(3)
                )
                candidates[tuple(probs)] = guarantee
    best = max(candidates.values())
    return {pt for pt, g in candidates.items() if g == best}, best


def test_row_minimax_of_shifted_diagonal_matches_bruteforce():
    diag = _mat(3, [[-1, 0, 0], [0, -1, 0], [0, 0, -1]])
    oracle_set, oracle_value = _oracle_row_optimal_3x3(diag)
    assert oracle_value == Fraction(-1, 3)
    assert oracle_set == {(Fraction(1, 3),) * 3}
    result = enumerate_minimax(diag, "contestant")
    assert {v.probs for v in result.vertices} == oracle_set


def test_minimax_set_of_reduced_game_matches_bruteforce(reduced3):
    oracle_set, oracle_value = _oracle_row_optimal_3x3(reduced3)
    assert oracle_value == Fraction(2, 3)
    result = enumerate_minimax(reduced3, "contestant")
    assert {v.probs for v in result.vertices} == oracle_set


# --- minimax membership ----------------------------------------------------


def test_is_minimax_examples(win_matrix, two_thirds):
    assert Q_HALF.probs == (Fraction(1, 6),) * 6
    check = is_minimax(win_matrix, Q_HALF, "host")
    assert check.is_minimax and check.worst_case == two_thirds

    assert Q_LEFT.probs == (
        Fraction(1, 3), Fraction(0), Fraction(1, 3),
        Fraction(0), Fraction(1, 3), Fraction(0),
    )
    assert is_minimax(win_matrix, Q_LEFT, "host").is_minimax

    pure_1l = MixedStrategy.point_mass(HOST_LABELS, "1L")
    check = is_minimax(win_matrix, pure_1l, "host")
    assert not check.is_minimax
    assert check.worst_case == 1  # row 3SS wins outright against 1L


def test_is_minimax_rejects_wrong_labels(win_matrix):
    with pytest.raises(ValueError):
        is_minimax(win_matrix, Q_HALF, "contestant")


def test_lambda_family_is_minimax_for_seeded_triples(win_matrix):
    rng = random.Random(1337)
    for _ in range(10):
        lam = [Fraction(rng.randint(0, 12), 12) for _ in range(3)]
        strategy = HostLambdaStrategy.of(*lam).expand()
        assert is_minimax(win_matrix, strategy, "host").is_minimax


def test_lambda_outside_unit_interval_rejected():
    with pytest.raises(ValueError):
        HostLambdaStrategy.of(Fraction(3, 2), 0, 0)
    with pytest.raises(ValueError):
        HostLambdaStrategy.of(0, Fraction(-1, 4), 1)


def test_convex_combinations_of_host_vertices_are_minimax(win_matrix):
    rng = random.Random(24601)
    vertices = host_lambda_vertices()
    for _ in range(6):
        weights = [Fraction(rng.randint(0, 5)) for _ in vertices]
        if sum(weights) == 0:
            weights[0] = Fraction(1)
        total = sum(weights)
        probs = tuple(
            sum(w * v.probs[k] for w, v in zip(weights, vertices)) / total
            for k in range(6)
        )
        mixture = MixedStrategy(HOST_LABELS, probs)
        assert is_minimax(win_matrix, mixture, "host").is_minimax


def test_symmetry_maps_minimax_sets_onto_themselves(win_matrix):
    host_set = {v.probs for v in enumerate_minimax(win_matrix, "host").vertices}
    for sigma in DOOR_PERMUTATIONS:
        # The unique contestant optimum is fixed by every door relabeling.
        permuted = {
            permute_contestant_label(sigma, l): p
            for l, p in zip(CONTESTANT_LABELS, P_STAR.probs)
        }
        assert MixedStrategy.from_mapping(CONTESTANT_LABELS, permuted) == P_STAR
        # The eight host vertices are permuted among themselves.
        for probs in host_set:
            moved = {
                permute_host_label(sigma, l): p for l, p in zip(HOST_LABELS, probs)
            }
            image = MixedStrategy.from_mapping(HOST_LABELS, moved)
            assert image.probs in host_set


# --- full-support exclusion ------------------------------------------------


def test_exclusion_against_fair_coin_host(win_matrix, two_thirds):
    report = verify_full_support_exclusion(win_matrix, Q_HALF)
    assert report.fully_supported
    assert report.best_response_value == two_thirds
    assert report.attainers == ()
    assert report.exclusion_holds
    assert set(report.dominated_payoffs) == {
        l for l in CONTESTANT_LABELS if l[1:] != "SS"
    }
    assert all(v < two_thirds for v in report.dominated_payoffs.values())


def test_exclusion_fails_against_left_leaning_host(win_matrix, two_thirds):
    report = verify_full_support_exclusion(win_matrix, Q_LEFT)
    assert not report.fully_supported
    assert report.best_response_value == two_thirds
    assert "1NS" in report.attainers
    assert not report.exclusion_holds


def test_exclusion_point_mass_not_fully_supported(win_matrix):
    report = verify_full_support_exclusion(
        win_matrix, MixedStrategy.point_mass(HOST_LABELS, "1L")
    )
    assert not report.fully_supported


def test_solution_json_shape(reduced3):
    data = solve(reduced3).to_json_dict()
    assert data["value"] == "2/3"
    assert data["contestant_optimal"]["probs"] == ["1/3", "1/3", "1/3"]
    assert data["certificate"]["host_caps"] == ["2/3", "2/3", "2/3"]
