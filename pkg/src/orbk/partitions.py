"""Partitions of n, the closure order on nilpotent orbits, and dimension counts.

The order here is the one under which larger partitions label smaller
orbits: ``lam <= mu`` when every prefix sum of ``lam`` is at least the
corresponding prefix sum of ``mu``.  The one-row partition ``(n)`` (regular
orbit) is the minimum and ``(1, ..., 1)`` (zero orbit) the maximum.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, zip_longest
from math import comb
from typing import Iterable, Iterator, Sequence, Union

from ._validation import InvalidInputError
from .tableaux import Tableau, tau_tableau

__all__ = [
    "Partition",
    "partitions_of",
    "conjugate",
    "paper_leq",
    "closure_partitions",
    "orbit_covers",
    "orbit_dim",
    "nilradical_dim",
    "codim_in_nilradical",
]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(isinstance(p, bool) or not isinstance(p, int) or p < 1 for p in parts):
            raise InvalidInputError(f"parts must be positive integers: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidInputError(f"parts must weakly decrease: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def to_json(self) -> str:
        return json.dumps(list(self.parts))

    @classmethod
    def from_json(cls, text: str) -> "Partition":
        return cls(tuple(json.loads(text)))


PartitionLike = Union[Partition, Sequence[int]]


def _as_partition(lam: PartitionLike) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    return tuple(
        (first,) + rest
        for first in range(min(n, largest), 0, -1)
        for rest in _partitions(n - first, first)
    )


def partitions_of(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions(n, n))


def conjugate(lam: PartitionLike) -> Partition:
    parts = _as_partition(lam).parts
    if not parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in parts if p > k) for k in range(parts[0])))


def paper_leq(lam: PartitionLike, mu: PartitionLike) -> bool:
    """Closure order: ``O_mu`` lies in the closure of ``O_lam``."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    if lam.n != mu.n:
        raise InvalidInputError(f"cannot compare partitions of {lam.n} and {mu.n}")
    pairs = list(zip_longest(lam.parts, mu.parts, fillvalue=0))
    lam_sums = accumulate(a for a, _ in pairs)
    mu_sums = accumulate(b for _, b in pairs)
    return all(a >= b for a, b in zip(lam_sums, mu_sums))


def closure_partitions(lam: PartitionLike) -> frozenset[Partition]:
    lam = _as_partition(lam)
    return frozenset(mu for mu in partitions_of(lam.n) if paper_leq(lam, mu))


def orbit_covers(lam: PartitionLike) -> frozenset[Partition]:
    """Minimal partitions strictly above ``lam``, found by filtering all partitions of n."""
    lam = _as_partition(lam)
    above = [mu for mu in closure_partitions(lam) if mu != lam]
    return frozenset(
        mu for mu in above if not any(nu != mu and paper_leq(nu, mu) for nu in above)
    )


def orbit_dim(lam: PartitionLike) -> int:
    """``n^2 - sum of squared conjugate parts``."""
    lam = _as_partition(lam)
    return lam.n**2 - sum(k * k for k in conjugate(lam).parts)


def _chain_lengths(chains: Iterable[Sequence[int]]) -> list[int]:
    return [len(c) for c in chains]


def nilradical_dim(chains: Iterable[Sequence[int]]) -> int:
    """Number of positive roots not inside a single chain."""
    lengths = _chain_lengths(chains)
    return comb(sum(lengths), 2) - sum(comb(c, 2) for c in lengths)


def codim_in_nilradical(T: Tableau, chains: Iterable[Sequence[int]]) -> int:
    chains = [tuple(c) for c in chains]
    subset = {a for c in chains for a in c[:-1]}
    if not subset <= tau_tableau(T):
        raise InvalidInputError(f"{T!r} does not lie in the closure: tau misses {sorted(subset - tau_tableau(T))}")
    return nilradical_dim(chains) - orbit_dim(T.shape) // 2
