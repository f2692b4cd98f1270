from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbk import InvalidInputError, Word
from orbk.words import (
    all_permutations,
    colligate,
    coxeter_length,
    duflo_leq,
    inversion_mask,
    inversion_set,
    psi_word,
    restrict_word,
    reverse,
    tau_word,
)
from strategies import permutations

BIG = [2, 1, 3, 7, 6, 5, 4, 8, 10, 9]


def test_word_rejects_repeats_and_nonpositive():
    with pytest.raises(InvalidInputError):
        Word((1, 1))
    with pytest.raises(InvalidInputError):
        Word((0, 1))


def test_position_lookup():
    w = Word((3, 1, 2))
    assert [w.position(i) for i in (1, 2, 3)] == [2, 3, 1]
    with pytest.raises(InvalidInputError):
        w.position(4)


@pytest.mark.parametrize(
    "w, expected",
    [
        ([1, 2, 3], set()),
        ([2, 1, 3], {(1, 2)}),
        (BIG, {(4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7), (1, 2), (9, 10)}),
    ],
)
def test_inversion_set_examples(w, expected):
    assert inversion_set(w) == expected


def test_inversion_set_needs_a_permutation():
    with pytest.raises(InvalidInputError):
        inversion_set([2, 3])


def test_duflo_examples():
    assert duflo_leq([1, 2, 3], [3, 1, 2])
    assert duflo_leq([2, 1, 3], [2, 1, 3])
    assert duflo_leq([2, 1, 3, 4], [2, 4, 1, 3])
    assert not duflo_leq([2, 4, 1, 3], [2, 1, 3, 4])
    with pytest.raises(InvalidInputError):
        duflo_leq([1, 2], [1, 2, 3])


@pytest.mark.parametrize("w, tau", [([1, 2, 3], set()), ([2, 1, 3], {1}), (BIG, {1, 4, 5, 6, 9})])
def test_tau_word(w, tau):
    assert tau_word(w) == tau


def test_reverse_and_colligate():
    assert reverse([1, 2, 3]) == Word((3, 2, 1))
    assert reverse([2, 4, 1, 3]) == Word((3, 1, 4, 2))
    assert reverse(reverse([5, 1, 4, 2, 3])) == Word((5, 1, 4, 2, 3))
    assert colligate([2, 1], [3]) == Word((2, 1, 3))
    assert colligate([], [4, 3]) == Word((4, 3))
    assert colligate(colligate([2, 1], [4, 3]), [5]) == Word((2, 1, 4, 3, 5))
    with pytest.raises(InvalidInputError):
        colligate([1, 2], [2, 3])


def test_psi_word():
    assert psi_word([1, 2, 3], 3) == Word((1, 2, 3))
    assert psi_word([3, 1, 2, 4], 4) == Word((1, 3, 4, 2))
    assert psi_word(psi_word([2, 4, 1, 3], 4), 4) == Word((2, 4, 1, 3))
    with pytest.raises(InvalidInputError):
        psi_word([5, 1], 4)


def test_restrict_word():
    assert restrict_word([3, 1, 4, 2], 1, 2) == Word((1, 2))
    assert restrict_word([3, 1, 4, 2], 1, 4) == Word((3, 1, 4, 2))
    assert restrict_word(BIG, 4, 7) == Word((7, 6, 5, 4))
    with pytest.raises(InvalidInputError):
        restrict_word([1, 2], 3, 2)


def test_word_json_round_trip():
    w = Word((2, 1, 3))
    assert w.to_json() == "[2, 1, 3]"
    assert Word.from_json(w.to_json()) == w


@given(permutations())
def test_mask_agrees_with_pair_scan(w):
    mask = inversion_mask(w)
    assert bin(mask).count("1") == len(inversion_set(w))


@pytest.mark.parametrize("n", range(1, 8))
def test_inversion_count_is_coxeter_length(n):
    for w in all_permutations(n):
        assert len(inversion_set(w)) == coxeter_length(w)


@given(permutations())
def test_tau_is_simple_part_of_inversion_set(w):
    assert tau_word(w) == {i for i, j in inversion_set(w) if j == i + 1}


@pytest.mark.parametrize("n", range(1, 6))
def test_duflo_is_a_partial_order(n):
    perms = list(all_permutations(n))
    masks = {w: inversion_mask(w) for w in perms}
    leq = {(a, b): masks[a] & ~masks[b] == 0 for a, b in product(perms, repeat=2)}
    for a in perms:
        assert leq[a, a]
    for a, b in product(perms, repeat=2):
        if leq[a, b] and leq[b, a]:
            assert a == b
    for a, b, c in product(perms, repeat=3):
        if leq[a, b] and leq[b, c]:
            assert leq[a, c]


@pytest.mark.parametrize("n", range(1, 6))
def test_psi_preserves_duflo_order(n):
    perms = list(all_permutations(n))
    for y, w in product(perms, repeat=2):
        assert duflo_leq(y, w) == duflo_leq(psi_word(y, n), psi_word(w, n))


@given(permutations(), st.data())
def test_restriction_composes(w, data):
    n = len(w)
    lo = data.draw(st.integers(1, n))
    hi = data.draw(st.integers(lo, n))
    inner_lo = data.draw(st.integers(lo, hi))
    inner_hi = data.draw(st.integers(inner_lo, hi))
    assert restrict_word(restrict_word(w, lo, hi), inner_lo, inner_hi) == restrict_word(w, inner_lo, inner_hi)
