import random
from fractions import Fraction

import pytest

from montyhall.game import CONTESTANT_LABELS, HOST_LABELS
from montyhall.matrices import build_host_matrix, payoffs_vs_rows
from montyhall.nash import (
    best_response,
    classify_equilibrium_response,
    is_equilibrium,
    mixed_nash,
    pure_nash,
    verify_host_indifference,
)
from montyhall.strategies import (
    HostLambdaStrategy,
    MixedStrategy,
    host_from_pi_lambda,
    uniform_switch,
)
from montyhall.zerosum import host_lambda_vertices

P_STAR = uniform_switch()
Q_LEFT = HostLambdaStrategy.of(1, 1, 1).expand()
Q_HALF = MixedStrategy.uniform(HOST_LABELS)


@pytest.fixture(scope="module")
def fixtures():
    return {
        kind: build_host_matrix(kind)
        for kind in ("zero_sum", "sympathetic", "indifferent", "maverick", "superstitious")
    }


# --- pure equilibria --------------------------------------------------------


def test_sympathetic_pure_equilibria_are_the_winning_cells(fixtures):
    bim = fixtures["sympathetic"]
    found = pure_nash(bim)
    cells = {(e.contestant.support()[0], e.host.support()[0]) for e in found}
    expected = {
        (r, c)
        for r in bim.row_labels
        for c in bim.col_labels
        if bim.entry(r, c) == (1, 1)
    }
    assert cells == expected
    assert len(found) == 36
    assert all(e.payoffs == (1, 1) for e in found)


def test_maverick_pure_equilibria(fixtures):
    found = pure_nash(fixtures["maverick"])
    cells = {(e.contestant.support()[0], e.host.support()[0]) for e in found}
    assert ("1NS", "1L") in cells
    assert ("1NN", "1L") in cells
    payoffs = {
        (e.contestant.support()[0], e.host.support()[0]): e.payoffs for e in found
    }
    assert payoffs[("1NS", "1L")] == (1, 4)
    assert payoffs[("1NN", "1L")] == (1, 5)
    # Door relabeling gives the full set: the stay-leaning plans paired
    # with the matching Left reveal.
    assert cells == {
        ("1NS", "1L"), ("1NN", "1L"),
        ("2NS", "2L"), ("2NN", "2L"),
        ("3NS", "3L"), ("3NN", "3L"),
    }


def test_zero_sum_has_no_pure_equilibrium(fixtures):
    assert pure_nash(fixtures["zero_sum"]) == []


def test_superstitious_has_no_pure_equilibrium(fixtures):
    assert pure_nash(fixtures["superstitious"]) == []


# --- mixed equilibria -------------------------------------------------------


def test_zero_sum_mixed_equilibria(fixtures, two_thirds):
    result = mixed_nash(fixtures["zero_sum"])
    assert len(result) > 0
    for eq in result:
        assert eq.payoffs[0] == two_thirds
        assert eq.payoffs[1] == -two_thirds
        assert eq.contestant == P_STAR
    hosts = {eq.host for eq in result}
    assert hosts == set(host_lambda_vertices())
    # One connected optimal family: a flagged continuum.
    assert len(result.components) == 1
    assert result.components[0].degenerate


def test_superstitious_mixed_equilibria_contain_the_left_solution(fixtures):
    result = mixed_nash(fixtures["superstitious"])
    profiles = {(eq.contestant, eq.host) for eq in result}
    assert (P_STAR, Q_LEFT) in profiles
    for eq in result:
        assert is_equilibrium(fixtures["superstitious"], eq.contestant, eq.host)
        assert eq.payoffs[0] == Fraction(2, 3)


def test_every_fixture_has_an_equilibrium_passing_deviation_tests(fixtures):
    for kind, bim in fixtures.items():
        result = mixed_nash(bim)
        assert len(result) > 0, kind
        for eq in result:
            assert is_equilibrium(bim, eq.contestant, eq.host), (kind, eq)


def test_mixed_nash_includes_pure_equilibria(fixtures):
    result = mixed_nash(fixtures["maverick"])
    pure = {
        (e.contestant.support()[0], e.host.support()[0])
        for e in pure_nash(fixtures["maverick"])
    }
    found_pure = {
        (e.contestant.support()[0], e.host.support()[0])
        for e in result
        if e.kind == "pure"
    }
    assert pure <= found_pure


def test_indifferent_host_equilibria_from_best_responses(fixtures):
    bim = fixtures["indifferent"]
    rng = random.Random(99)
    hosts = [Q_HALF, MixedStrategy.point_mass(HOST_LABELS, "2L")]
    for _ in range(3):
        weights = [Fraction(rng.randint(0, 4)) for _ in HOST_LABELS]
        if sum(weights) == 0:
            weights[0] = Fraction(1)
        total = sum(weights)
        hosts.append(
            MixedStrategy(HOST_LABELS, tuple(w / total for w in weights))
        )
    for q in hosts:
        report = best_response(bim.contestant, q)
        p = MixedStrategy.point_mass(CONTESTANT_LABELS, report.best_pure_set[0])
        assert is_equilibrium(bim, p, q)


# --- best responses ---------------------------------------------------------


def test_best_response_to_left_leaning_host(win_matrix, two_thirds):
    report = best_response(win_matrix, Q_LEFT)
    assert report.value == two_thirds
    assert set(report.best_pure_set) == {
        "1SS", "2SS", "3SS", "1NS", "2NS", "3NS",
    }
    assert report.pi == (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
    # Rule I fires for every door (all Left reveals carry weight), and the
    # excluded stay-plans sit strictly below the value.
    fired = {(e.strategy, e.rule) for e in report.excluded}
    assert {("1SN", "I"), ("2SN", "I"), ("3SN", "I")} <= fired
    assert all(e.payoff < report.value for e in report.excluded)


def test_best_response_to_point_mass(win_matrix):
    report = best_response(win_matrix, MixedStrategy.point_mass(HOST_LABELS, "1L"))
    assert report.value == 1
    assert report.pi == (1, 0, 0)
    assert 1 - min(report.pi) == report.value


def test_best_response_weighted_example(win_matrix):
    host = host_from_pi_lambda(
        (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)),
        (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
    )
    # Independent oracle: direct argmax over the twelve pure rows.
    payoffs = payoffs_vs_rows(win_matrix, host)
    oracle_value = max(payoffs)
    oracle_set = {
        l for l, v in zip(win_matrix.row_labels, payoffs) if v == oracle_value
    }
    assert oracle_value == Fraction(5, 6)
    assert oracle_set == {"3SS"}

    report = best_response(win_matrix, host)
    assert report.value == oracle_value
    assert set(report.best_pure_set) == oracle_set
    assert report.value == 1 - min(report.pi)


def test_best_response_value_is_one_minus_min_pi(win_matrix):
    rng = random.Random(31415)
    for _ in range(50):
        weights = [Fraction(rng.randint(1, 9)) for _ in range(6)]
        total = sum(weights)
        host = MixedStrategy(HOST_LABELS, tuple(w / total for w in weights))
        report = best_response(win_matrix, host)
        assert report.value == 1 - min(report.pi)
        # Fully supported host: no best response touches a stay action.
        assert all(set(l[1:]) == {"S"} for l in report.best_pure_set)
        for exclusion in report.excluded:
            assert exclusion.payoff < report.value, exclusion


def test_best_response_rejects_mismatched_labels(win_matrix):
    with pytest.raises(ValueError):
        best_response(win_matrix, P_STAR)


# --- equilibrium response classification ------------------------------------


def test_classify_case_one():
    result = classify_equilibrium_response(
        (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)), True
    )
    assert result.case == 1
    assert result.support == ("3SS",)
    assert result.strategy == MixedStrategy.point_mass(CONTESTANT_LABELS, "3SS")


def test_classify_case_two():
    result = classify_equilibrium_response(
        (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)), True
    )
    assert result.case == 2
    assert result.support == ("2SS", "3SS")
    assert result.strategy is None


def test_classify_case_three():
    result = classify_equilibrium_response(
        (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)), True
    )
    assert result.case == 3
    assert result.support == ("1SS", "2SS", "3SS")
    assert result.strategy == P_STAR


def test_classify_requires_full_support():
    with pytest.raises(ValueError):
        classify_equilibrium_response((Fraction(1, 2), Fraction(1, 2), 0), True)
    with pytest.raises(ValueError):
        classify_equilibrium_response(
            (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)), False
        )


def test_classifier_agrees_with_best_response(win_matrix):
    rng = random.Random(2718)
    for _ in range(50):
        weights = [Fraction(rng.randint(1, 7)) for _ in range(3)]
        total = sum(weights)
        pi = tuple(w / total for w in weights)
        lam = tuple(Fraction(rng.randint(1, 11), 12) for _ in range(3))
        host = host_from_pi_lambda(pi, lam)
        prediction = classify_equilibrium_response(pi, host.is_fully_supported())
        report = best_response(win_matrix, host)
        assert set(report.best_pure_set) == set(prediction.support)


# --- host indifference -------------------------------------------------------


def test_host_indifference_zero_sum(fixtures, two_thirds):
    report = verify_host_indifference(fixtures["zero_sum"].host, P_STAR)
    assert report.is_constant
    assert set(report.values) == {-two_thirds}
    assert report.closing_case == 3


def test_host_indifference_zero_matrix(fixtures):
    report = verify_host_indifference(
        fixtures["indifferent"].host, MixedStrategy.point_mass(CONTESTANT_LABELS, "2SN")
    )
    assert report.is_constant
    assert set(report.values) == {0}


def test_host_indifference_fails_for_maverick_row(fixtures):
    report = verify_host_indifference(
        fixtures["maverick"].host, MixedStrategy.point_mass(CONTESTANT_LABELS, "1SS")
    )
    assert not report.is_constant
    assert report.values == (0, 0, -1, -1, -1, -1)
    assert report.closing_case is None


def test_host_indifference_two_row_mixture(fixtures):
    p = MixedStrategy.from_mapping(
        CONTESTANT_LABELS, {"2SS": Fraction(1, 2), "3SS": Fraction(1, 2)}
    )
    report = verify_host_indifference(fixtures["indifferent"].host, p)
    assert report.is_constant
    assert report.closing_case == 2
