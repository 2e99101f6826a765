"""Integer partitions as plain tuples, plus the Ferrers-diagram statistics.

A partition is a weakly decreasing tuple of positive integers; the empty
tuple is the unique partition of 0.  Every index taken or returned by the
functions here is 1-based, and a part beyond the last one reads as 0.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError

Partition = tuple  # tuple[int, ...]

INFINITY = math.inf


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a partition.

    Zero entries are dropped; negative entries or an increase between
    consecutive nonzero entries raise :class:`DomainError`.
    """
    out = []
    for x in parts:
        if isinstance(x, bool) or not isinstance(x, int):
            raise DomainError(f"partition parts must be integers, got {x!r}")
        if x < 0:
            raise DomainError(f"negative part {x} in partition")
        if x == 0:
            continue
        if out and x > out[-1]:
            raise DomainError(f"parts must be weakly decreasing: {list(parts)!r}")
        out.append(x)
    return tuple(out)


def strip_zeros(parts) -> Partition:
    # Internal fast path: caller guarantees weak decrease and no negatives.
    parts = tuple(parts)
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def part(lam: Partition, i: int) -> int:
    """The 1-based ``i``-th part, reading absent parts as 0."""
    if i < 1:
        raise DomainError(f"part index must be >= 1, got {i}")
    return lam[i - 1] if i <= len(lam) else 0


def conjugate_part(lam: Partition, j: int) -> int:
    """Number of parts of ``lam`` that are at least ``j`` (``j >= 1``)."""
    count = 0
    for x in lam:
        if x < j:
            break
        count += 1
    return count


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(conjugate_part(lam, j) for j in range(1, lam[0] + 1))


def durfee_side(lam: Partition) -> int:
    d = 0
    for i, x in enumerate(lam, start=1):
        if x < i:
            break
        d = i
    return d


def m_durfee_width(lam: Partition, m: int) -> int:
    """Width of the largest ``(m+j) x j`` rectangle inside the diagram.

    A rectangle with zero rows always fits, so for negative ``m`` the width
    is at least ``-m``.  For ``m >= length(lam)`` no rectangle with a column
    fits and the width is 0.
    """
    j = max(0, -m)
    while True:
        rows = m + j + 1
        if rows > len(lam) or lam[rows - 1] < j + 1:
            return j
        j += 1


def rank(lam: Partition) -> int:
    if not lam:
        raise DomainError("rank of the empty partition is undefined")
    return lam[0] - len(lam)


def rank_set_contains(lam: Partition, m: int) -> bool:
    """Membership of ``m`` in ``[-l1, 1-l2, ..., L-1-lL, L, L+1, ...]``."""
    if m >= len(lam):
        return True
    # i - lam[i] is strictly increasing in i, so stop once it passes m.
    for i, x in enumerate(lam):
        v = i - x
        if v == m:
            return True
        if v > m:
            return False
    return False


def smallest_part(lam: Partition):
    return lam[-1] if lam else INFINITY


def multiplicity_of_smallest(lam: Partition) -> int:
    """``n_s(lam)``: how many times the smallest part occurs."""
    if not lam:
        return 0
    return lam.count(lam[-1])


def _generate(n: int, max_part: int, min_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), min_part - 1, -1):
        for rest in _generate(n - first, first, min_part):
            yield (first,) + rest


def enumerate_partitions(n: int, max_part: int | None = None, min_part: int = 1) -> Iterator[Partition]:
    """Yield every partition of ``n`` in reverse-lexicographic order.

    ``max_part`` and ``min_part`` restrict the allowed part sizes.
    """
    if n < 0:
        raise DomainError(f"cannot partition a negative integer ({n})")
    if min_part < 1:
        raise DomainError("min_part must be positive")
    yield from _generate(n, n if max_part is None else max_part, min_part)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """Cached tuple of :func:`enumerate_partitions` output."""
    return tuple(enumerate_partitions(n))


def _generate_distinct(n: int, max_part: int, min_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), min_part - 1, -1):
        for rest in _generate_distinct(n - first, first - 1, min_part):
            yield (first,) + rest


def enumerate_distinct_partitions(n: int, min_part: int = 1) -> Iterator[Partition]:
    """Partitions of ``n`` into distinct parts, reverse-lexicographic."""
    if n < 0:
        raise DomainError(f"cannot partition a negative integer ({n})")
    yield from _generate_distinct(n, n, min_part)


def format_partition(lam: Partition) -> str:
    """Render as ``(3,2,2)``; the empty partition renders as ``∅``."""
    if not lam:
        return "∅"
    return "(" + ",".join(map(str, lam)) + ")"


def to_json(lam: Partition) -> list:
    return list(lam)


def from_json(data) -> Partition:
    if not isinstance(data, list):
        raise DomainError(f"a partition is encoded as a JSON array, got {type(data).__name__}")
    return make_partition(data)
