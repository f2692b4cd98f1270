import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbk import InvalidInputError, Tableau
from orbk.richardson import SimpleRootSubset, richardson_tableau
from orbk.tableaux import (
    EMPTY,
    concat_horizontal,
    format_ascii,
    project,
    project_by_sliding,
    psi_tableau,
    reading_word,
    row_of,
    rs_pair,
    rs_tableau,
    shift,
    stack_vertical,
    standard_tableaux,
    tau_tableau,
    transpose,
)
from orbk.words import Word, all_permutations, reverse, tau_word
from strategies import permutations, tableaux


def T(*rows):
    return Tableau(tuple(tuple(r) for r in rows))


# the running examples: T_I for I={1,4,5,6,9} and I={1,3,4,5,7,8}, n=10
T22 = T((1, 3, 4, 8, 9), (2, 5, 10), (6,), (7,))
T24 = T((1, 3, 7, 10), (2, 4, 8), (5, 9), (6,))


@pytest.mark.parametrize(
    "rows",
    [
        [[1, 2], [3, 4, 5]],   # rows grow
        [[1, 3], [2, 2]],      # repeated entry
        [[2, 1]],              # row decreases
        [[1, 3], [4, 2]],      # row decreases
        [[1, 2], [2]],         # duplicate
        [[2, 3], [1]],         # column decreases
        [[1], []],             # empty row
    ],
)
def test_invalid_tableaux_rejected(rows):
    with pytest.raises(InvalidInputError):
        Tableau(tuple(map(tuple, rows)))


def test_empty_tableau_is_valid():
    assert EMPTY.shape == () and not EMPTY and EMPTY.size == 0


def test_non_contiguous_entries_are_allowed():
    X = T((3, 7), (5,))
    assert X.entries == (3, 5, 7)
    with pytest.raises(InvalidInputError):
        tau_tableau(X)


def test_row_of():
    assert row_of(T((1, 2, 3)), 2) == 1
    assert row_of(T22, 10) == 2
    assert row_of(T22, 7) == 4
    with pytest.raises(InvalidInputError):
        row_of(T22, 11)


def test_tau_tableau_examples():
    assert tau_tableau(T((1, 2, 3))) == set()
    assert tau_tableau(T((1,), (2,), (3,), (4,))) == {1, 2, 3}
    assert tau_tableau(T24) == {1, 3, 4, 5, 7, 8}


def test_rs_examples():
    assert rs_tableau([1, 2, 3]) == T((1, 2, 3))
    assert rs_tableau([2, 4, 1, 3]) == T((1, 3), (2, 4))
    assert rs_tableau([3, 2, 1]) == T((1,), (2,), (3,))
    assert rs_tableau([7, 3, 9]) == T((3, 9), (7,))


def test_rs_pair_examples():
    assert rs_pair([1, 2, 3]) == (T((1, 2, 3)), T((1, 2, 3)))
    assert rs_pair([2, 1]) == (T((1,), (2,)), T((1,), (2,)))
    assert rs_pair([2, 4, 1, 3]) == (T((1, 3), (2, 4)), T((1, 2), (3, 4)))
    with pytest.raises(InvalidInputError):
        rs_pair([2, 3])


def test_reading_word_examples():
    assert reading_word(T((1, 3), (2, 4))) == Word((2, 4, 1, 3))
    assert reading_word(T((1, 2, 3))) == Word((1, 2, 3))
    assert reading_word(T((1,), (2,), (3,))) == Word((3, 2, 1))


def test_transpose_examples():
    assert transpose(T((1, 2, 3))) == T((1,), (2,), (3,))
    assert transpose(transpose(T22)) == T22
    assert transpose(T((1, 3), (2, 4))) == T((1, 2), (3, 4))


def test_concat_and_stack_examples():
    assert concat_horizontal(T((1, 2)), T((3, 4))) == T((1, 2, 3, 4))
    assert concat_horizontal(T((1,), (2,)), T((3,), (4,))) == T((1, 3), (2, 4))
    assert stack_vertical(T((1,)), T((2,))) == T((1,), (2,))
    assert stack_vertical(T((1, 2)), T((3, 4))) == T((1, 2), (3, 4))
    with pytest.raises(InvalidInputError):
        concat_horizontal(T((1, 3)), T((2,)))


def test_concat_rebuilds_richardson_tableau():
    head = richardson_tableau(SimpleRootSubset.of(8, [1, 4, 5, 6]))
    assert concat_horizontal(head, T((9,), (10,))) == T22


def test_project_examples():
    assert project(T22, 1, 10) == T22
    assert project(T((1, 4), (2,), (3,)), 1, 3) == T((1,), (2,), (3,))
    # removing n from the last chain {9, 10}
    assert project(T22, 1, 9) == T((1, 3, 4, 8, 9), (2, 5), (6,), (7,))
    assert project(T22, 11, 12) == EMPTY


def test_psi_tableau_examples():
    assert psi_tableau(T((1, 2, 3))) == T((1, 2, 3))
    assert psi_tableau(T((1, 3, 4), (2,))) == T((1, 2, 3), (4,))


def test_shift():
    assert shift(T((1, 3), (2,)), 4) == T((5, 7), (6,))


def test_standard_tableaux_counts():
    assert [len(standard_tableaux(n)) for n in range(1, 8)] == [1, 2, 4, 10, 26, 76, 232]
    assert len(standard_tableaux(4, (2, 2))) == 2
    with pytest.raises(InvalidInputError):
        standard_tableaux(4, (2, 1))


def test_standard_tableaux_sorted_and_distinct():
    ts = standard_tableaux(5)
    assert list(ts) == sorted(ts, key=Tableau.sort_key)
    assert len(set(ts)) == len(ts)


def test_json_formats():
    assert T22.to_json() == json.dumps({"rows": [[1, 3, 4, 8, 9], [2, 5, 10], [6], [7]]})
    assert Tableau.from_json(T22.to_json()) == T22
    with pytest.raises(InvalidInputError):
        Tableau.from_dict({"cols": []})


def test_ascii_layout():
    text = format_ascii(T((1, 3), (2,)))
    assert text.splitlines()[1] == "| 1 | 3 |"
    assert format_ascii(EMPTY) == "(empty)"


@given(tableaux())
def test_reading_word_round_trip(t):
    assert rs_tableau(reading_word(t)) == t


@given(tableaux())
def test_json_round_trip(t):
    assert Tableau.from_json(t.to_json()) == t


@pytest.mark.parametrize("n", range(1, 8))
def test_reading_word_round_trip_exhaustive(n):
    for t in standard_tableaux(n):
        assert rs_tableau(reading_word(t)) == t


@pytest.mark.parametrize("n", range(1, 7))
def test_schensted_reverse_transposes(n):
    for w in all_permutations(n):
        assert rs_tableau(reverse(w)) == transpose(rs_tableau(w))


@pytest.mark.parametrize("n", range(1, 8))
def test_tau_compatibility(n):
    for w in all_permutations(n):
        assert tau_tableau(rs_tableau(w)) == tau_word(w)


@given(permutations())
def test_recording_tableau_is_insertion_of_inverse(w):
    inverse = [0] * len(w)
    for k, a in enumerate(w, start=1):
        inverse[a - 1] = k
    P, Q = rs_pair(w)
    assert rs_pair(inverse) == (Q, P)


@given(tableaux(max_n=6), st.data())
def test_sliding_matches_word_restriction(t, data):
    n = t.size
    lo = data.draw(st.integers(1, n))
    hi = data.draw(st.integers(lo, n))
    assert project_by_sliding(t, lo, hi) == project(t, lo, hi)


@given(tableaux(max_n=6), st.data())
def test_projection_nesting(t, data):
    n = t.size
    a = data.draw(st.integers(1, n))
    b = data.draw(st.integers(a, n))
    c = data.draw(st.integers(1, n))
    d = data.draw(st.integers(c, n))
    lo, hi = max(a, c), min(b, d)
    outer = project(project(t, c, d), a, b)
    if lo > hi:
        assert outer == EMPTY
    else:
        assert outer == project(t, lo, hi)
    assert project(project(t, a, b), a, b) == project(t, a, b)


@given(tableaux())
def test_psi_is_an_involution(t):
    assert psi_tableau(psi_tableau(t)) == t
    assert psi_tableau(t).shape == t.shape


@given(tableaux(), tableaux())
def test_stack_is_transposed_concat(p, q):
    q = shift(q, p.size)
    assert transpose(stack_vertical(p, q)) == concat_horizontal(transpose(p), transpose(q))
