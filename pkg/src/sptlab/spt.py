"""The spt-function, marked partitions, and S-partitions with their spt-crank."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .errors import CapacityError, DomainError
from .partitions import (
    Partition,
    enumerate_distinct_partitions,
    enumerate_partitions,
    from_json as partition_from_json,
    multiplicity_of_smallest,
    partitions_of,
    smallest_part,
)
from .ranks import partition_count

S_PARTITION_CAP = 18


class MarkedPartition(NamedTuple):
    """A partition with one occurrence of its smallest part marked by index."""

    parts: Partition
    k: int

    def is_valid(self) -> bool:
        return bool(self.parts) and 1 <= self.k <= len(self.parts) and self.parts[self.k - 1] == self.parts[-1]

    def to_json(self) -> dict:
        return {"parts": list(self.parts), "k": self.k}

    @classmethod
    def from_json(cls, data) -> "MarkedPartition":
        if not isinstance(data, dict) or set(data) != {"parts", "k"}:
            raise DomainError('a marked partition is encoded as {"parts": [...], "k": int}')
        mp = cls(partition_from_json(data["parts"]), data["k"])
        if not isinstance(mp.k, int) or not mp.is_valid():
            raise DomainError(f"k={data['k']!r} does not index a smallest part of {list(mp.parts)}")
        return mp

    def __str__(self):
        return f"(({','.join(map(str, self.parts))}),{self.k})"


class SPartition(NamedTuple):
    pi1: Partition
    pi2: Partition
    pi3: Partition

    @property
    def weight(self) -> int:
        return sum(self.pi1) + sum(self.pi2) + sum(self.pi3)

    @property
    def sign(self) -> int:
        return 1 if len(self.pi1) % 2 else -1

    @property
    def crank(self) -> int:
        return len(self.pi2) - len(self.pi3)

    def is_valid(self) -> bool:
        p1 = self.pi1
        if not p1 or any(a <= b for a, b in zip(p1, p1[1:])):
            return False
        return smallest_part(p1) <= min(smallest_part(self.pi2), smallest_part(self.pi3))

    def to_json(self) -> dict:
        return {"pi1": list(self.pi1), "pi2": list(self.pi2), "pi3": list(self.pi3)}

    @classmethod
    def from_json(cls, data) -> "SPartition":
        sp = cls(*(partition_from_json(data[key]) for key in ("pi1", "pi2", "pi3")))
        if not sp.is_valid():
            raise DomainError(f"not an S-partition: {data!r}")
        return sp


@dataclass(frozen=True)
class NetCrankTable:
    n: int
    net: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"n": self.n, "counts": {str(m): c for m, c in sorted(self.net.items())}}


def spt_weighted(n: int) -> int:
    """spt(n) as the sum of n_s(lambda) over all partitions of ``n``."""
    if n < 1:
        raise DomainError("spt(n) needs n >= 1")
    return sum(multiplicity_of_smallest(lam) for lam in partitions_of(n))


def enumerate_marked(n: int) -> Iterator[MarkedPartition]:
    if n < 1:
        raise DomainError("marked partitions need n >= 1")
    for lam in partitions_of(n):
        first = len(lam) - multiplicity_of_smallest(lam) + 1
        for k in range(first, len(lam) + 1):
            yield MarkedPartition(lam, k)


def enumerate_s_partitions(n: int, cap: int = S_PARTITION_CAP) -> Iterator[SPartition]:
    """Every S-partition of weight ``n``.

    Iterates over the split ``|pi1| + |pi2| + |pi3| = n``; ``pi2`` and
    ``pi3`` draw parts no smaller than the smallest part of ``pi1``.
    """
    if n < 1:
        raise DomainError("S-partitions need n >= 1")
    if n > cap:
        raise CapacityError(
            f"S-partition enumeration capped at n={cap} (got {n}); raise --s-partition-cap "
            "or use the recurrence / doubly marked counts instead",
            flag="--s-partition-cap",
        )
    for w1 in range(1, n + 1):
        for pi1 in enumerate_distinct_partitions(w1):
            low = pi1[-1]
            rest = n - w1
            for w2 in range(rest, -1, -1):
                pi2_options = list(enumerate_partitions(w2, min_part=low))
                if not pi2_options:
                    continue
                pi3_options = list(enumerate_partitions(rest - w2, min_part=low))
                for pi2 in pi2_options:
                    for pi3 in pi3_options:
                        yield SPartition(pi1, pi2, pi3)


def s_partition_net_counts(n: int, cap: int = S_PARTITION_CAP) -> NetCrankTable:
    """N_S(m, n) for every m, from the signed S-partition enumeration."""
    net: dict[int, int] = {}
    for sp in enumerate_s_partitions(n, cap):
        net[sp.crank] = net.get(sp.crank, 0) + sp.sign
    return NetCrankTable(n, {m: v for m, v in sorted(net.items()) if v})


def ns_mod(k: int, t: int, n: int, cap: int = S_PARTITION_CAP) -> int:
    if t < 1:
        raise DomainError(f"modulus must be positive, got {t}")
    if not 0 <= k < t:
        raise DomainError(f"residue {k} not in [0, {t})")
    return sum(v for m, v in s_partition_net_counts(n, cap).net.items() if m % t == k)


def ns_recurrence(m: int, n: int) -> int:
    """N_S(m, n) by Dyson's alternating recurrence in p(n)."""
    if n < 1:
        raise DomainError("N_S(m, n) needs n >= 1")
    total = 0
    k = 1
    while True:
        # The j = 0 argument is the largest; it is concave in k, so once it
        # is negative past its peak every later term vanishes.
        top = n - k * m - k * (k + 1) // 2
        if top < 0 and k >= -m:
            break
        inner = sum(partition_count(n - k * (m + j) - k * (k + 1) // 2) for j in range(k))
        total += inner if k % 2 else -inner
        k += 1
    return total
