"""Standard Young tableaux over arbitrary entry sets and Robinson-Schensted insertion."""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from ._validation import InvalidInputError, check_contiguous
from .words import Word, WordLike, as_word, colligate, psi_word, restrict_word

__all__ = [
    "Tableau",
    "EMPTY",
    "row_of",
    "tau_tableau",
    "rs_tableau",
    "rs_pair",
    "reading_word",
    "transpose",
    "concat_horizontal",
    "stack_vertical",
    "project",
    "project_by_sliding",
    "psi_tableau",
    "shift",
    "standard_tableaux",
    "format_ascii",
]


@dataclass(frozen=True)
class Tableau:
    """A standard Young tableau stored row by row, top row first.

    Entries may be any distinct positive integers; the empty tableau is valid.
    Rows strictly increase left to right, columns strictly increase downwards
    and row lengths weakly decrease.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        seen: set[int] = set()
        for k, row in enumerate(rows):
            if not row:
                raise InvalidInputError(f"row {k + 1} is empty: {rows}")
            if k and len(row) > len(rows[k - 1]):
                raise InvalidInputError(f"row lengths must weakly decrease: {rows}")
            for c, a in enumerate(row):
                if isinstance(a, bool) or not isinstance(a, int) or a < 1:
                    raise InvalidInputError(f"entries must be positive integers, got {a!r}")
                if a in seen:
                    raise InvalidInputError(f"duplicate entry {a} in {rows}")
                seen.add(a)
                if c and row[c - 1] >= a:
                    raise InvalidInputError(f"row {k + 1} is not increasing: {row}")
                if k and rows[k - 1][c] >= a:
                    raise InvalidInputError(f"column {c + 1} is not increasing at entry {a}")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(sorted(a for r in self.rows for a in r))

    def __bool__(self) -> bool:
        return bool(self.rows)

    def __repr__(self) -> str:
        return f"Tableau({[list(r) for r in self.rows]})"

    def __str__(self) -> str:
        return format_ascii(self)

    def row_index(self) -> dict[int, int]:
        return {a: k for k, row in enumerate(self.rows, start=1) for a in row}

    def sort_key(self) -> tuple:
        """Order by shape (largest first), then row lists lexicographically."""
        return (tuple(-x for x in self.shape), self.rows)

    def to_dict(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Tableau":
        if not isinstance(data, dict) or "rows" not in data:
            raise InvalidInputError('tableau JSON must look like {"rows": [[...], ...]}')
        return cls(tuple(tuple(r) for r in data["rows"]))

    @classmethod
    def from_json(cls, text: str) -> "Tableau":
        return cls.from_dict(json.loads(text))


EMPTY = Tableau(())


def row_of(T: Tableau, u: int) -> int:
    """1-based row index of entry ``u``."""
    for k, row in enumerate(T.rows, start=1):
        if u in row:
            return k
    raise InvalidInputError(f"{u} is not an entry of {T!r}")


def tau_tableau(T: Tableau) -> frozenset[int]:
    """Indices ``i`` such that ``i + 1`` sits strictly below ``i``."""
    n = check_contiguous(T.entries, "tableau entry set")
    r = T.row_index()
    return frozenset(i for i in range(1, n) if r[i + 1] > r[i])


def _insert(rows: list[list[int]], a: int) -> int:
    """Row-insert ``a``; return the index of the row that grew."""
    k = 0
    while True:
        if k == len(rows):
            rows.append([a])
            return k
        row = rows[k]
        pos = bisect_left(row, a)
        if pos == len(row):
            row.append(a)
            return k
        a, row[pos] = row[pos], a
        k += 1


def rs_tableau(w: WordLike) -> Tableau:
    """Insertion tableau of ``w`` by row bumping; entries are kept as they are."""
    rows: list[list[int]] = []
    for a in as_word(w):
        _insert(rows, a)
    return Tableau(tuple(tuple(r) for r in rows))


def rs_pair(w: WordLike) -> tuple[Tableau, Tableau]:
    """Insertion and recording tableaux of a permutation."""
    w = as_word(w)
    if not w.is_permutation():
        raise InvalidInputError(f"rs_pair needs a permutation, got {list(w)}")
    rows: list[list[int]] = []
    rec: list[list[int]] = []
    for step, a in enumerate(w, start=1):
        k = _insert(rows, a)
        if k == len(rec):
            rec.append([])
        rec[k].append(step)
    return Tableau(tuple(map(tuple, rows))), Tableau(tuple(map(tuple, rec)))


def reading_word(T: Tableau) -> Word:
    """Rows read bottom to top, each left to right; ``rs_tableau`` inverts it."""
    return Word(tuple(a for row in reversed(T.rows) for a in row))


def transpose(T: Tableau) -> Tableau:
    if not T:
        return EMPTY
    cols = len(T.rows[0])
    return Tableau(tuple(tuple(row[c] for row in T.rows if len(row) > c) for c in range(cols)))


def _check_separated(P: Tableau, Q: Tableau) -> None:
    if P and Q and max(P.entries) >= min(Q.entries):
        raise InvalidInputError("every entry of the first tableau must be smaller than every entry of the second")


def concat_horizontal(P: Tableau, Q: Tableau) -> Tableau:
    """The tableau ``(P, Q)``: Q's rows shifted left next to P's rows."""
    _check_separated(P, Q)
    return rs_tableau(colligate(reading_word(P), reading_word(Q)))


def stack_vertical(P: Tableau, Q: Tableau) -> Tableau:
    """``P`` over ``Q``, computed as the transpose of ``(P^t, Q^t)``."""
    _check_separated(P, Q)
    return transpose(concat_horizontal(transpose(P), transpose(Q)))


def project(T: Tableau, lo: int, hi: int) -> Tableau:
    """Keep only entries in ``[lo, hi]`` and rectify; entries are not renumbered."""
    return rs_tableau(restrict_word(reading_word(T), lo, hi))


def project_by_sliding(T: Tableau, lo: int, hi: int) -> Tableau:
    """Same projection as :func:`project`, done with literal jeu de taquin slides.

    Entries above ``hi`` occupy an outer strip and are simply erased.  Entries
    below ``lo`` are deleted one at a time from the corner, each deletion
    followed by sliding the hole out to the rim.
    """
    if lo > hi:
        raise InvalidInputError(f"empty interval [{lo}, {hi}]")
    rows = [[a for a in row if a <= hi] for row in T.rows]
    rows = [r for r in rows if r]
    while rows and rows[0][0] < lo:
        i, j = 0, 0
        while True:
            right = rows[i][j + 1] if j + 1 < len(rows[i]) else None
            below = rows[i + 1][j] if i + 1 < len(rows) and j < len(rows[i + 1]) else None
            if right is None and below is None:
                del rows[i][j]
                if not rows[i]:
                    del rows[i]
                break
            if below is None or (right is not None and right < below):
                rows[i][j] = right
                j += 1
            else:
                rows[i][j] = below
                i += 1
    return Tableau(tuple(map(tuple, rows)))


def psi_tableau(T: Tableau) -> Tableau:
    n = check_contiguous(T.entries, "tableau entry set")
    return rs_tableau(psi_word(reading_word(T), n))


def shift(T: Tableau, offset: int) -> Tableau:
    """Add ``offset`` to every entry."""
    return Tableau(tuple(tuple(a + offset for a in row) for row in T.rows))


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _tableaux_of_shape(shape: tuple[int, ...]) -> tuple[Tableau, ...]:
    n = sum(shape)
    if n == 0:
        return (EMPTY,)
    out = []
    # n sits in a removable corner
    for k, length in enumerate(shape):
        if k + 1 < len(shape) and shape[k + 1] == length:
            continue
        smaller = list(shape)
        smaller[k] -= 1
        if smaller[k] == 0:
            smaller.pop()
        for T in _tableaux_of_shape(tuple(smaller)):
            rows = [list(r) for r in T.rows]
            if k == len(rows):
                rows.append([])
            rows[k].append(n)
            out.append(Tableau(tuple(map(tuple, rows))))
    return tuple(sorted(out, key=Tableau.sort_key))


def standard_tableaux(n: int, shape: Sequence[int] | None = None) -> tuple[Tableau, ...]:
    """All standard tableaux on ``{1..n}``, optionally of one shape."""
    if shape is not None:
        shape = tuple(shape)
        if sum(shape) != n:
            raise InvalidInputError(f"shape {shape} is not a partition of {n}")
        return _tableaux_of_shape(shape)
    return tuple(T for lam in _partitions(n, n) for T in _tableaux_of_shape(lam))


def format_ascii(T: Tableau) -> str:
    """Boxed layout, one box per entry.

    >>> print(format_ascii(Tableau(((1, 3), (2,)))))
    +---+---+
    | 1 | 3 |
    +---+---+
    | 2 |
    +---+
    """
    if not T:
        return "(empty)"
    width = max(len(str(a)) for a in T.entries)

    def border(cells: int) -> str:
        return "+" + "+".join("-" * (width + 2) for _ in range(cells)) + "+"

    lines = []
    prev = 0
    for row in T.rows:
        lines.append(border(max(prev, len(row))))
        lines.append("| " + " | ".join(str(a).rjust(width) for a in row) + " |")
        prev = len(row)
    lines.append(border(prev))
    return "\n".join(lines)
