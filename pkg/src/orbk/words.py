"""Permutation words, inversion sets, the Duflo order and the diagram involution on words.

A word is a one-line form ``[a_1, ..., a_m]`` of pairwise distinct positive
integers.  Words over ``{1..n}`` are permutations; words over other ground
sets appear as pieces of colligations and restrictions.

Inversion sets are encoded as integer bitmasks.  The pair ``(i, j)`` with
``i < j`` owns bit ``(j-1)(j-2)/2 + (i-1)``, an index that does not depend on
``n``, so subset tests are a single ``&``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence, Union

from ._validation import InvalidInputError, check_distinct_positive

__all__ = [
    "Word",
    "as_word",
    "pair_bit",
    "inversion_mask",
    "inversion_set",
    "duflo_leq",
    "tau_word",
    "reverse",
    "colligate",
    "psi_word",
    "restrict_word",
    "all_permutations",
    "coxeter_length",
]


@dataclass(frozen=True)
class Word:
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", check_distinct_positive(self.entries, "word entries"))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    def __repr__(self) -> str:
        return f"Word({list(self.entries)})"

    @property
    def ground_set(self) -> tuple[int, ...]:
        return tuple(sorted(self.entries))

    def is_permutation(self) -> bool:
        return self.ground_set == tuple(range(1, len(self.entries) + 1))

    def position(self, value: int) -> int:
        """1-based place of ``value`` in the word (``p_w`` in the usual notation)."""
        try:
            return self.entries.index(value) + 1
        except ValueError:
            raise InvalidInputError(f"{value} is not an entry of {self!r}") from None

    def positions(self) -> dict[int, int]:
        return {a: k for k, a in enumerate(self.entries, start=1)}

    def to_json(self) -> str:
        return json.dumps(list(self.entries))

    @classmethod
    def from_json(cls, text: str) -> "Word":
        data = json.loads(text)
        if not isinstance(data, list):
            raise InvalidInputError("a word serializes as a JSON array of integers")
        return cls(tuple(data))


WordLike = Union[Word, Sequence[int]]


def as_word(w: WordLike) -> Word:
    return w if isinstance(w, Word) else Word(tuple(w))


def _permutation(w: WordLike) -> Word:
    w = as_word(w)
    if not w.is_permutation():
        raise InvalidInputError(f"expected a permutation of 1..{len(w)}, got {list(w)}")
    return w


def pair_bit(i: int, j: int) -> int:
    """Bit index of the positive root ``alpha_{i,j}``, ``i < j``."""
    return (j - 1) * (j - 2) // 2 + (i - 1)


def inversion_mask(w: WordLike) -> int:
    """Bitmask of the inversion set of a permutation."""
    w = _permutation(w)
    mask = 0
    seen: list[int] = []
    # a later, smaller entry i with an earlier larger j means p_w(i) > p_w(j)
    for a in w.entries:
        for b in seen:
            if b > a:
                mask |= 1 << pair_bit(a, b)
        seen.append(a)
    return mask


def inversion_set(w: WordLike) -> frozenset[tuple[int, int]]:
    """All pairs ``(i, j)``, ``i < j``, with ``j`` placed before ``i`` in ``w``."""
    w = _permutation(w)
    pos = w.positions()
    n = len(w)
    return frozenset(
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if pos[i] > pos[j]
    )


def duflo_leq(y: WordLike, w: WordLike) -> bool:
    """Duflo order: ``S(y)`` is contained in ``S(w)``."""
    y, w = as_word(y), as_word(w)
    if len(y) != len(w):
        raise InvalidInputError(f"cannot compare words of S_{len(y)} and S_{len(w)}")
    my, mw = inversion_mask(y), inversion_mask(w)
    return my & ~mw == 0


def tau_word(w: WordLike) -> frozenset[int]:
    """Indices ``i`` with ``i + 1`` placed before ``i``."""
    w = _permutation(w)
    pos = w.positions()
    return frozenset(i for i in range(1, len(w)) if pos[i] > pos[i + 1])


def reverse(w: WordLike) -> Word:
    return Word(tuple(reversed(as_word(w).entries)))


def colligate(x: WordLike, y: WordLike) -> Word:
    """Concatenate two words with disjoint entry sets."""
    x, y = as_word(x), as_word(y)
    common = set(x.entries) & set(y.entries)
    if common:
        raise InvalidInputError(f"colligation needs disjoint entries, shared: {sorted(common)}")
    return Word(x.entries + y.entries)


def psi_word(w: WordLike, n: int) -> Word:
    """Reverse the word and send every entry ``a`` to ``n + 1 - a``.

    Applies verbatim to subwords of permutations of ``{1..n}``.
    """
    w = as_word(w)
    too_big = [a for a in w.entries if a > n]
    if too_big:
        raise InvalidInputError(f"entries {too_big} exceed n={n}")
    return Word(tuple(n + 1 - a for a in reversed(w.entries)))


def restrict_word(w: WordLike, lo: int, hi: int) -> Word:
    """Subword of the entries lying in ``[lo, hi]``, order preserved."""
    if lo > hi:
        raise InvalidInputError(f"empty interval [{lo}, {hi}]")
    return Word(tuple(a for a in as_word(w).entries if lo <= a <= hi))


def all_permutations(n: int) -> Iterator[Word]:
    for p in permutations(range(1, n + 1)):
        yield Word(p)


def coxeter_length(w: WordLike) -> int:
    """Number of adjacent swaps bubble sort needs; an independent count of inversions."""
    a = list(as_word(w).entries)
    swaps = 0
    for end in range(len(a) - 1, 0, -1):
        for k in range(end):
            if a[k] > a[k + 1]:
                a[k], a[k + 1] = a[k + 1], a[k]
                swaps += 1
    return swaps

