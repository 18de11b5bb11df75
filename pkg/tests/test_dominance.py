from fractions import Fraction

import pytest

from montyhall.dominance import (
    DominanceRelation,
    eliminate,
    find_dominated,
    win_set,
    win_set_compare,
)
from montyhall.matrices import PayoffMatrix
from montyhall.zerosum import solve


def _pairs(relations):
    return {(r.dominator, r.dominated) for r in relations}


def test_weak_row_dominance_includes_named_pairs(win_matrix):
    pairs = _pairs(find_dominated(win_matrix, "row", "weak"))
    assert ("1SS", "2SN") in pairs
    assert ("1SS", "2NN") in pairs
    assert ("3SS", "2NS") in pairs


def test_weak_relations_carry_a_strict_witness(win_matrix):
    for rel in find_dominated(win_matrix, "row", "weak"):
        assert rel.witness is not None
        a = win_matrix.row(rel.dominator)
        b = win_matrix.row(rel.dominated)
        assert all(x >= y for x, y in zip(a, b))
        j = win_matrix.col_labels.index(rel.witness)
        assert a[j] > b[j]


def test_no_strict_row_dominance_in_win_matrix(win_matrix):
    # Brute-force oracle over all 132 ordered row pairs: every dominance
    # in the win matrix has ties, so the strict list must be empty.
    strict_pairs = []
    for a in win_matrix.row_labels:
        for b in win_matrix.row_labels:
            if a != b and all(
                x > y for x, y in zip(win_matrix.row(a), win_matrix.row(b))
            ):
                strict_pairs.append((a, b))
    assert strict_pairs == []
    assert find_dominated(win_matrix, "row", "strict") == []


def test_column_dominance_is_from_the_minimizer_view():
    m = PayoffMatrix.build(("r1", "r2"), ("c1", "c2"), [[0, 1], [1, 2]])
    pairs = _pairs(find_dominated(m, "column", "weak"))
    assert pairs == {("c1", "c2")}  # lower payoff column dominates for the host
    strict = find_dominated(m, "column", "strict")
    assert _pairs(strict) == {("c1", "c2")}
    assert strict[0].witness is None


def test_weak_elimination_reduces_to_switch_game(win_matrix, reduced3):
    trace = eliminate(win_matrix, "rows_then_columns", "weak")
    assert trace.surviving_rows == ("1SS", "2SS", "3SS")
    assert trace.surviving_cols == ("1L", "2L", "3L")
    assert trace.reduced == reduced3
    eliminated_rows = [s.eliminated for s in trace.steps if s.axis == "row"]
    assert sorted(eliminated_rows) == sorted(
        l for l in win_matrix.row_labels if l[1:] != "SS"
    )
    # The column stage only collapses duplicated reveal columns.
    col_steps = [s for s in trace.steps if s.axis == "column"]
    assert {s.eliminated for s in col_steps} == {"1R", "2R", "3R"}
    assert all(s.kind == "duplicate" for s in col_steps)
    assert {(s.eliminated, s.dominator) for s in col_steps} == {
        ("1R", "1L"), ("2R", "2L"), ("3R", "3L"),
    }


def test_elimination_trace_replays_soundly(win_matrix):
    trace = eliminate(win_matrix, "rows_then_columns", "weak")
    current = win_matrix
    for step in trace.steps:
        if step.axis == "row":
            a = current.row(step.dominator)
            b = current.row(step.eliminated)
            assert all(x >= y for x, y in zip(a, b))
            rows = [r for r in current.row_labels if r != step.eliminated]
            current = current.submatrix(rows, current.col_labels)
        else:
            a = current.column(step.dominator)
            b = current.column(step.eliminated)
            assert all(x <= y for x, y in zip(a, b))
            cols = [c for c in current.col_labels if c != step.eliminated]
            current = current.submatrix(current.row_labels, cols)
        if step.kind == "duplicate":
            assert a == b
    assert current == trace.reduced


def test_trivial_single_cell_matrix():
    m = PayoffMatrix.build(("r1",), ("c1",), [[7]])
    trace = eliminate(m, "rows_then_columns", "weak")
    assert trace.steps == ()
    assert trace.reduced == m


def test_strict_fixpoint_eliminates_nothing(win_matrix):
    trace = eliminate(win_matrix, "fixpoint", "strict")
    assert trace.steps == ()
    assert trace.reduced == win_matrix


def test_duplicate_columns_after_row_stage(win_matrix):
    switch_rows = win_matrix.submatrix(("1SS", "2SS", "3SS"), win_matrix.col_labels)
    for door in "123":
        assert switch_rows.column(f"{door}L") == switch_rows.column(f"{door}R")


def test_value_preserved_by_elimination(win_matrix):
    trace = eliminate(win_matrix, "rows_then_columns", "weak")
    assert solve(win_matrix).value == solve(trace.reduced).value == Fraction(2, 3)


def test_fixpoint_policy_matches_on_win_matrix(win_matrix):
    a = eliminate(win_matrix, "rows_then_columns", "weak")
    b = eliminate(win_matrix, "fixpoint", "weak")
    assert a.reduced == b.reduced


def test_trace_serialization(win_matrix):
    trace = eliminate(win_matrix, "rows_then_columns", "weak")
    data = trace.to_json_dict()
    assert data["surviving_rows"] == ["1SS", "2SS", "3SS"]
    assert data["steps"][0]["step"] == 1
    text = trace.to_text()
    assert "surviving columns: 1L, 2L, 3L" in text


# --- reveal-blind win sets -------------------------------------------------


def test_win_sets():
    assert win_set("1NN") == {1}
    assert win_set("2SS") == {1, 3}
    assert win_set("1SS") == {2, 3}
    # A side-dependent plan only has a guaranteed win where the reveal is
    # forced its way; on the matching door the host can dodge it.
    assert win_set("1SN") == {3}


def test_win_set_compare_examples():
    cmp = win_set_compare("1NN", "2SS")
    assert cmp.relation == "b_dominates"
    assert cmp.win_set_a == {1}
    assert cmp.win_set_b == {1, 3}

    assert win_set_compare("1SS", "1SS").relation == "equal"

    cmp = win_set_compare("1SS", "1NN")
    assert cmp.relation == "incomparable"
    assert cmp.win_set_a == {2, 3}
    assert cmp.win_set_b == {1}


def test_win_set_compare_distinct_equal_sets():
    cmp = win_set_compare("1SN", "2SN")
    assert cmp.relation == "equal"
    assert cmp.win_set_a == cmp.win_set_b == {3}
