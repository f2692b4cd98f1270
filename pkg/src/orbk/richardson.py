"""Richardson tableaux, tail moves and the descendants of a Richardson orbital variety.

Chains are indexed from 1, matching the usual left-to-right numbering
``C_1, ..., C_l`` of the runs of consecutive integers cut out by a subset of
simple roots.  Every tableau built here by appending boxes is re-validated
as a standard tableau on construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ._validation import InvalidInputError, check_bound, check_contiguous, check_subset_indices
from .tableaux import EMPTY, Tableau, project, reading_word, standard_tableaux, tau_tableau
from .words import Word

__all__ = [
    "SimpleRootSubset",
    "ChainForm",
    "ChainStats",
    "chains_from_subset",
    "chain_stats",
    "richardson_tableau",
    "richardson_word",
    "tail_move",
    "t_next",
    "t_prev",
    "t_family",
    "p_next",
    "p_prev",
    "descendants",
    "closure_contains",
    "closure_members",
    "first_violation",
    "t_bracket_m",
    "bracket_representative",
    "box_move_descendant",
    "psi_subset",
    "psi_next_formula",
    "psi_prev_formula",
]


@dataclass(frozen=True)
class SimpleRootSubset:
    """A subset of the simple roots ``alpha_1 .. alpha_{n-1}`` of sl_n, stored as indices."""

    n: int
    indices: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", check_subset_indices(self.indices, self.n))

    @classmethod
    def of(cls, n: int, indices: Iterable[int] = ()) -> "SimpleRootSubset":
        return cls(n, frozenset(indices))

    @classmethod
    def full(cls, n: int) -> "SimpleRootSubset":
        return cls(n, frozenset(range(1, n)))

    def __contains__(self, i: int) -> bool:
        return i in self.indices

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.indices))

    def __len__(self) -> int:
        return len(self.indices)

    def __repr__(self) -> str:
        return f"SimpleRootSubset(n={self.n}, I={sorted(self.indices)})"

    def is_full(self) -> bool:
        return len(self.indices) == self.n - 1

    def to_dict(self) -> dict:
        return {"n": self.n, "I": sorted(self.indices)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "SimpleRootSubset":
        try:
            return cls(int(data["n"]), frozenset(data["I"]))
        except (KeyError, TypeError):
            raise InvalidInputError('subset JSON must look like {"n": 10, "I": [1, 3]}') from None

    @classmethod
    def from_json(cls, text: str) -> "SimpleRootSubset":
        return cls.from_dict(json.loads(text))

    @staticmethod
    def all_subsets(n: int) -> Iterator["SimpleRootSubset"]:
        for bits in range(1 << max(n - 1, 0)):
            yield SimpleRootSubset(n, frozenset(i + 1 for i in range(n - 1) if bits >> i & 1))


@dataclass(frozen=True)
class ChainForm:
    """Maximal runs of consecutive integers partitioning ``{1..n}``."""

    chains: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        chains = tuple(tuple(c) for c in self.chains)
        object.__setattr__(self, "chains", chains)
        flat = [a for c in chains for a in c]
        if flat != list(range(1, len(flat) + 1)) or any(not c for c in chains):
            raise InvalidInputError(f"chains must be nonempty consecutive runs covering 1..n: {chains}")

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.chains)

    def __len__(self) -> int:
        return len(self.chains)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        """Chain ``C_i`` for ``1 <= i <= l``."""
        if not 1 <= i <= len(self.chains):
            raise InvalidInputError(f"chain index {i} outside 1..{len(self.chains)}")
        return self.chains[i - 1]

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.chains)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.chains)

    @property
    def maxima(self) -> tuple[int, ...]:
        return tuple(c[-1] for c in self.chains)

    def chain_of(self, u: int) -> int:
        for i, c in enumerate(self.chains, start=1):
            if c[0] <= u <= c[-1]:
                return i
        raise InvalidInputError(f"{u} is not in 1..{self.n}")

    def to_subset(self) -> SimpleRootSubset:
        return SimpleRootSubset(self.n, frozenset(a for c in self.chains for a in c[:-1]))

    def to_json(self) -> str:
        return json.dumps([list(c) for c in self.chains])


def chains_from_subset(I: SimpleRootSubset) -> ChainForm:
    chains: list[list[int]] = []
    for a in range(1, I.n + 1):
        if a > 1 and (a - 1) in I:
            chains[-1].append(a)
        else:
            chains.append([a])
    return ChainForm(tuple(map(tuple, chains)))


@dataclass(frozen=True)
class ChainStats:
    """Left/right comparison statistics of every chain length against its neighbours.

    Each field is a tuple indexed by ``chain - 1``.  The defaults ``0`` and
    ``n`` used when the defining set is empty are kept as they are, because
    the descendant criteria compare against them directly.
    """

    n: int
    lengths: tuple[int, ...]
    next_l: tuple[int, ...]
    prev_l: tuple[int, ...]
    sprev_l: tuple[int, ...]
    snext_r: tuple[int, ...]
    sprev_r: tuple[int, ...]
    snext_l: tuple[int, ...]
    next_r: tuple[int, ...]

    def get(self, name: str, i: int) -> int:
        return getattr(self, name)[i - 1]


def _pick(values: list[int], default: int, best=min) -> int:
    return best(values) if values else default


def chain_stats(chains: ChainForm) -> ChainStats:
    c = chains.lengths
    n = chains.n
    rng = range(len(c))
    left = [c[:k] for k in rng]
    right = [c[k + 1:] for k in rng]
    return ChainStats(
        n=n,
        lengths=c,
        next_l=tuple(_pick([x for x in left[k] if x >= c[k]], 0, min) for k in rng),
        prev_l=tuple(_pick([x for x in left[k] if x <= c[k]], n, max) for k in rng),
        sprev_l=tuple(_pick([x for x in left[k] if x < c[k]], n, max) for k in rng),
        snext_r=tuple(_pick([x for x in right[k] if x > c[k]], n, min) for k in rng),
        sprev_r=tuple(_pick([x for x in right[k] if x < c[k]], 0, max) for k in rng),
        snext_l=tuple(_pick([x for x in left[k] if x > c[k]], n, min) for k in rng),
        next_r=tuple(_pick([x for x in right[k] if x >= c[k]], 0, min) for k in rng),
    )


def _append_column(rows: list[list[int]], column: Sequence[int], start: int = 0) -> None:
    """Append ``column[k]`` to the end of row ``start + k``, opening rows as needed."""
    for k, a in enumerate(column):
        r = start + k
        while r >= len(rows):
            rows.append([])
        rows[r].append(a)


def _freeze(rows: list[list[int]]) -> Tableau:
    return Tableau(tuple(tuple(r) for r in rows))


def richardson_tableau(I: SimpleRootSubset) -> Tableau:
    rows: list[list[int]] = []
    for chain in chains_from_subset(I):
        _append_column(rows, chain)
    T = _freeze(rows)
    # row rule: entry i sits one row below i - 1 exactly when alpha_{i-1} is in I
    r = T.row_index()
    for i in range(2, I.n + 1):
        assert r[i] == (r[i - 1] + 1 if (i - 1) in I else 1), f"row rule fails at {i} for {I!r}"
    return T


def richardson_word(I: SimpleRootSubset) -> Word:
    """The longest element of the parabolic subgroup: each chain reversed, in order."""
    return Word(tuple(a for chain in chains_from_subset(I) for a in reversed(chain)))


def tail_move(I: SimpleRootSubset, depth: int, chain: int, tail_start: int) -> Tableau:
    """Move the tail ``C_chain[tail_start:]`` below row ``depth`` of the earlier chains.

    Rows ``1..depth`` of the tableau built from chains ``1..chain-1`` keep the
    head of the chain appended as usual; the tail goes to the ends of rows
    ``depth+1, depth+2, ...``; the later chains are appended as in
    :func:`richardson_tableau`.
    """
    chains = chains_from_subset(I)
    lengths = chains.lengths
    if not 2 <= chain <= len(chains):
        raise InvalidInputError(f"chain index {chain} outside 2..{len(chains)}")
    c_i = lengths[chain - 1]
    if not 1 <= tail_start <= c_i:
        raise InvalidInputError(f"tail start {tail_start} outside 1..{c_i}")
    if depth < tail_start:
        raise InvalidInputError(f"depth {depth} is smaller than tail start {tail_start}")
    if depth not in lengths[: chain - 1]:
        raise InvalidInputError(f"no chain before C_{chain} has length {depth}")

    rows: list[list[int]] = []
    for c in chains.chains[: chain - 1]:
        _append_column(rows, c)
    C = chains[chain]
    _append_column(rows, C[: tail_start - 1])
    _append_column(rows, C[tail_start - 1:], start=depth)
    for c in chains.chains[chain:]:
        _append_column(rows, c)
    return _freeze(rows)


def _check_chain(I: SimpleRootSubset, i: int) -> tuple[ChainForm, ChainStats]:
    chains = chains_from_subset(I)
    if not 1 <= i <= len(chains):
        raise InvalidInputError(f"chain index {i} outside 1..{len(chains)}")
    return chains, chain_stats(chains)


def t_next(I: SimpleRootSubset, i: int) -> Tableau:
    """Move ``sigma_i`` down to the first row that can take it; empty if there is none."""
    chains, st = _check_chain(I, i)
    d = st.next_l[i - 1]
    if d == 0:
        return EMPTY
    return tail_move(I, d, i, st.lengths[i - 1])


def t_prev(I: SimpleRootSubset, i: int) -> Tableau:
    """Push the shortest movable tail of chain ``i`` one row down; empty if impossible."""
    chains, st = _check_chain(I, i)
    s = st.sprev_l[i - 1]
    if st.prev_l[i - 1] != s or s == I.n:
        return EMPTY
    return tail_move(I, s, i, s)


def t_family(I: SimpleRootSubset, i: int) -> frozenset[Tableau]:
    """The nonempty members of ``{t_next(i), t_prev(i)}``."""
    return frozenset(T for T in (t_next(I, i), t_prev(I, i)) if T)


def p_next(I: SimpleRootSubset, i: int) -> int:
    """Last chain before ``i`` whose length equals ``next_l(i)``."""
    chains, st = _check_chain(I, i)
    target = st.next_l[i - 1]
    if target == 0:
        raise InvalidInputError(f"t_next is empty for chain {i} of {I!r}")
    return max(s for s in range(1, i) if st.lengths[s - 1] == target)


def p_prev(I: SimpleRootSubset, i: int) -> int:
    """Last chain before ``i`` whose length equals ``sprev_l(i)``."""
    if not t_prev(I, i):
        raise InvalidInputError(f"t_prev is empty for chain {i} of {I!r}")
    st = chain_stats(chains_from_subset(I))
    target = st.sprev_l[i - 1]
    return max(s for s in range(1, i) if st.lengths[s - 1] == target)


def descendants(I: SimpleRootSubset) -> frozenset[Tableau]:
    """Tableaux of the geometric descendants of the Richardson variety of ``I``.

    Empty for ``I`` the full set of simple roots.
    """
    if I.is_full():
        return frozenset()
    st = chain_stats(chains_from_subset(I))
    out = set()
    for i in range(1, len(st.lengths) + 1):
        k = i - 1
        nl, c = st.next_l[k], st.lengths[k]
        if nl == c or (nl > c and st.snext_r[k] > nl):
            T = t_next(I, i)
            if T:
                out.add(T)
        sp = st.sprev_l[k]
        if sp < I.n and st.sprev_r[k] < sp:
            T = t_prev(I, i)
            if T:
                out.add(T)
    return frozenset(out)


def closure_contains(I: SimpleRootSubset, T: Tableau) -> bool:
    if check_contiguous(T.entries, "tableau entry set") != I.n:
        raise InvalidInputError(f"tableau has {T.size} entries, expected {I.n}")
    return I.indices <= tau_tableau(T)


def closure_members(I: SimpleRootSubset, bound: int | None = None) -> tuple[Tableau, ...]:
    """All standard tableaux whose tau-invariant contains ``I``, sorted by shape then rows."""
    check_bound(I.n, bound)
    return tuple(T for T in standard_tableaux(I.n) if I.indices <= tau_tableau(T))


def first_violation(I: SimpleRootSubset, T: Tableau) -> int:
    """Smallest entry sitting strictly lower in ``T`` than in the Richardson tableau."""
    if not closure_contains(I, T):
        raise InvalidInputError(f"{T!r} is not in the closure of {I!r}")
    r_T = T.row_index()
    r_I = richardson_tableau(I).row_index()
    for u in range(1, I.n + 1):
        if r_T[u] > r_I[u]:
            return u
    raise InvalidInputError("T equals the Richardson tableau")


def t_bracket_m(I: SimpleRootSubset, T: Tableau) -> Tableau:
    """The member of some ``T_I(i)`` lying above ``T``, chosen by the first violated row."""
    m = first_violation(I, T)
    chains = chains_from_subset(I)
    i = chains.chain_of(m)
    nxt, prv = t_next(I, i), t_prev(I, i)
    if not (nxt and prv):
        return nxt or prv
    s = chain_stats(chains).sprev_l[i - 1]
    return prv if m <= chains[i][s - 1] else nxt


def bracket_representative(I: SimpleRootSubset, T: Tableau) -> Word:
    """Word ``[w, x]`` whose insertion tableau is ``t_bracket_m(I, T)``.

    ``w`` reads the projection of the bracket tableau onto ``1..sigma_i`` and
    ``x`` lists the later chains, each reversed.
    """
    target = t_bracket_m(I, T)
    chains = chains_from_subset(I)
    i = chains.chain_of(first_violation(I, T))
    sigma = chains[i][-1]
    head = reading_word(project(target, 1, sigma)).entries
    tail = tuple(a for c in chains.chains[i:] for a in reversed(c))
    return Word(head + tail)


def box_move_descendant(T: Tableau) -> Tableau:
    """Move the box holding ``n`` down to the first row shorter than its row by two."""
    n = check_contiguous(T.entries, "tableau entry set")
    shape = list(T.shape) + [0]
    i = T.row_index()[n]
    j = next((m for m in range(1, len(shape) + 1) if shape[m - 1] < shape[i - 1] - 1), None)
    if j is None:
        return EMPTY
    rows = [list(r) for r in T.rows]
    rows[i - 1].remove(n)
    _append_column(rows, [n], start=j - 1)
    return _freeze(rows)


def psi_subset(I: SimpleRootSubset) -> SimpleRootSubset:
    return SimpleRootSubset(I.n, frozenset(I.n - i for i in I.indices))


def _psi_tail_move(I: SimpleRootSubset, i: int, p: int, tail_start: int) -> Tableau:
    chains = chains_from_subset(I)
    return tail_move(psi_subset(I), chains.lengths[i - 1], len(chains) + 1 - p, tail_start)


def psi_next_formula(I: SimpleRootSubset, i: int) -> Tableau:
    """Closed form of ``psi(t_next(I, i))`` as a tail move over ``psi(I)``."""
    p = p_next(I, i)
    return _psi_tail_move(I, i, p, chains_from_subset(I).lengths[i - 1])


def psi_prev_formula(I: SimpleRootSubset, i: int) -> Tableau:
    """Closed form of ``psi(t_prev(I, i))`` as a tail move over ``psi(I)``."""
    p = p_prev(I, i)
    return _psi_tail_move(I, i, p, chains_from_subset(I).lengths[p - 1])

