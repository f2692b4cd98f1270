"""Input validation helpers shared by every module."""

import os
from typing import Iterable, Sequence

DEFAULT_BOUND = 7
BOUND_ENV = "ORBK_BOUND"


class InvalidInputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class BoundExceededError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed the configured bound."""


def enumeration_bound(bound: int | None = None) -> int:
    """Resolve the enumeration bound: explicit value, then $ORBK_BOUND, then the default."""
    if bound is not None:
        value = bound
    else:
        raw = os.environ.get(BOUND_ENV)
        try:
            value = int(raw) if raw else DEFAULT_BOUND
        except ValueError:
            raise InvalidInputError(f"{BOUND_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InvalidInputError(f"enumeration bound must be positive, got {value}")
    return value


def check_bound(n: int, bound: int | None = None) -> None:
    limit = enumeration_bound(bound)
    if n > limit:
        raise BoundExceededError(f"n={n} exceeds the enumeration bound {limit}")


def check_rank(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"n must be a positive integer, got {n!r}")
    return n


def check_distinct_positive(entries: Sequence[int], what: str = "entries") -> tuple[int, ...]:
    out = tuple(entries)
    for a in out:
        if isinstance(a, bool) or not isinstance(a, int) or a < 1:
            raise InvalidInputError(f"{what} must be positive integers, got {a!r}")
    if len(set(out)) != len(out):
        raise InvalidInputError(f"{what} must be pairwise distinct: {list(out)}")
    return out


def check_contiguous(entries: Iterable[int], what: str = "entry set") -> int:
    """Return n when ``entries`` is exactly {1..n}; raise otherwise."""
    values = sorted(entries)
    if values != list(range(1, len(values) + 1)):
        raise InvalidInputError(f"{what} must be {{1..n}}, got {values}")
    return len(values)


def check_subset_indices(indices: Iterable[int], n: int) -> frozenset[int]:
    check_rank(n)
    out = frozenset(indices)
    bad = sorted(i for i in out if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= n - 1)
    if bad:
        raise InvalidInputError(f"simple-root indices must lie in 1..{n - 1}, got {bad}")
    return out
