"""Doubly marked partitions, their spt-crank, and the pair map psi / phi.

A column-marked partition ``(lam, s, t)`` carries two distinguished
columns.  It lies in U_n when ``1 <= s <= D(lam)`` and ``1 <= t <= lam_1``;
it is doubly marked when additionally ``s <= t`` and columns ``s`` and
``t`` have the same height.
"""

from __future__ import annotations

import enum
from collections import Counter
from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import DomainError
from .partitions import (
    Partition,
    conjugate_part,
    durfee_side,
    from_json as partition_from_json,
    m_durfee_width,
    part,
    partitions_of,
    rank_set_contains,
    strip_zeros,
)


class Kind(enum.Enum):
    DOUBLY_MARKED = "doubly_marked"
    U_ONLY = "u_only"
    INVALID = "invalid"


class ColumnMarkedPartition(NamedTuple):
    parts: Partition
    s: int
    t: int

    def to_json(self) -> dict:
        return {"parts": list(self.parts), "s": self.s, "t": self.t}

    @classmethod
    def from_json(cls, data) -> "ColumnMarkedPartition":
        if not isinstance(data, dict) or set(data) != {"parts", "s", "t"}:
            raise DomainError('a column-marked partition is encoded as {"parts": [...], "s": int, "t": int}')
        s, t = data["s"], data["t"]
        if not (isinstance(s, int) and isinstance(t, int)):
            raise DomainError("s and t must be integers")
        return cls(partition_from_json(data["parts"]), s, t)

    def __str__(self):
        return f"(({','.join(map(str, self.parts))}),{self.s},{self.t})"


# Doubly marked partitions share the representation; classify() tells them apart.
DoublyMarkedPartition = ColumnMarkedPartition


class PartitionPair(NamedTuple):
    alpha: Partition
    beta: Partition

    @property
    def weight(self) -> int:
        return sum(self.alpha) + sum(self.beta)

    def is_well_formed(self) -> bool:
        b = self.beta
        return bool(b) and b[0] == b[-1] > 0

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta)}

    @classmethod
    def from_json(cls, data) -> "PartitionPair":
        pair = cls(partition_from_json(data["alpha"]), partition_from_json(data["beta"]))
        if not pair.is_well_formed():
            raise DomainError("beta must be a nonempty partition with equal parts")
        return pair


def in_U(parts: Partition, s: int, t: int) -> bool:
    return bool(parts) and 1 <= s <= durfee_side(parts) and 1 <= t <= parts[0]


def classify(parts: Partition, s: int, t: int) -> Kind:
    if not in_U(parts, s, t):
        return Kind.INVALID
    if s <= t and conjugate_part(parts, s) == conjugate_part(parts, t):
        return Kind.DOUBLY_MARKED
    return Kind.U_ONLY


def is_doubly_marked(x: ColumnMarkedPartition) -> bool:
    return classify(*x) is Kind.DOUBLY_MARKED


def _require_dmp(x: ColumnMarkedPartition) -> None:
    if classify(*x) is not Kind.DOUBLY_MARKED:
        raise DomainError(f"{x} is not a doubly marked partition")


def g_value(x: ColumnMarkedPartition) -> int:
    _require_dmp(x)
    return conjugate_part(x.parts, x.s) - x.s + 1


def spt_crank_dmp(x: ColumnMarkedPartition) -> int:
    """c(lam, s, t) = g - lam_g + t - s with g = lam'_s - s + 1."""
    g = g_value(x)
    return g - part(x.parts, g) + x.t - x.s


def enumerate_dmp(n: int) -> Iterator[ColumnMarkedPartition]:
    """Doubly marked partitions of ``n``: partitions in enumeration order, then s, then t."""
    if n < 1:
        raise DomainError("doubly marked partitions need n >= 1")
    for lam in partitions_of(n):
        heights = [conjugate_part(lam, j) for j in range(1, lam[0] + 1)]
        for s in range(1, durfee_side(lam) + 1):
            for t in range(s, lam[0] + 1):
                if heights[t - 1] != heights[s - 1]:
                    break
                yield ColumnMarkedPartition(lam, s, t)


@lru_cache(maxsize=None)
def _dmp_crank_counts(n: int) -> tuple:
    return tuple(sorted(Counter(spt_crank_dmp(x) for x in enumerate_dmp(n)).items()))


def dmp_crank_counts(n: int) -> dict:
    """|Q_{m,n}| for every m with a nonzero count."""
    return dict(_dmp_crank_counts(n))


def psi(x: ColumnMarkedPartition) -> PartitionPair:
    _require_dmp(x)
    lam, s, t = x
    height = conjugate_part(lam, s)
    cut = t - s + 1
    alpha = tuple(v - cut for v in lam[:height]) + lam[height:]
    beta = tuple(conjugate_part(lam, c) for c in range(s, t + 1))
    # Block rows keep at least s-1 cells, so zeros only appear when s = 1,
    # and then the block is all of lam.
    return PartitionPair(strip_zeros(alpha), beta)


def _drop_zero_rows(seq) -> Partition:
    return tuple(v for v in seq if v)


def _pair_statistics(alpha: Partition, m: int) -> tuple[int, int]:
    """(j, h): m-Durfee width of alpha and the largest h with alpha_{j+m+1+h} >= h."""
    j = m_durfee_width(alpha, m)
    base = j + m + 1
    h = 0
    while part(alpha, base + h + 1) >= h + 1:
        h += 1
    return j, h


def v_statistics(pair: PartitionPair, m: int):
    """(j, h) when ``pair`` lies in V_{m,n}, otherwise None."""
    if not pair.is_well_formed() or not rank_set_contains(pair.alpha, m):
        return None
    j, h = _pair_statistics(pair.alpha, m)
    if pair.beta[0] != j + m + 1 + h:
        return None
    return j, h


def v_membership(pair: PartitionPair, m: int) -> bool:
    return v_statistics(pair, m) is not None


def v_memberships(pair: PartitionPair) -> Iterator[tuple[int, int, int]]:
    """Every (m, j, h) such that ``pair`` lies in V_m with statistics (j, h).

    Only rank-set members below ``beta_1`` can qualify, since
    ``beta_1 = j + m + 1 + h`` with ``j, h >= 0``.
    """
    if not pair.is_well_formed():
        return
    alpha, top = pair.alpha, pair.beta[0] - 1
    candidates = [i - x for i, x in enumerate(alpha) if i - x <= top]
    candidates.extend(range(len(alpha), top + 1))
    for m in candidates:
        stats = v_statistics(pair, m)
        if stats is not None:
            yield (m, *stats)


def phi(pair: PartitionPair, m: int) -> ColumnMarkedPartition:
    """Inverse of :func:`psi` on V_{m,n}."""
    stats = v_statistics(pair, m)
    if stats is None:
        raise DomainError(f"pair {pair.to_json()} is not in V_m for m={m}")
    _, h = stats
    alpha, beta = pair
    width = len(beta)
    rows = max(beta[0], len(alpha))
    lam = tuple(part(alpha, i) + (width if i <= beta[0] else 0) for i in range(1, rows + 1))
    return ColumnMarkedPartition(_drop_zero_rows(lam), h + 1, h + width)


def enumerate_pairs(n: int) -> Iterator[PartitionPair]:
    """All pairs (alpha, beta) of total weight ``n`` with beta nonempty and rectangular."""
    for b in range(1, n + 1):
        for count in range(1, n // b + 1):
            beta = (b,) * count
            for alpha in partitions_of(n - b * count):
                yield PartitionPair(alpha, beta)


def enumerate_V(m: int, n: int) -> Iterator[PartitionPair]:
    """V_{m,n} by generate-and-filter over :func:`enumerate_pairs`."""
    for pair in enumerate_pairs(n):
        if v_membership(pair, m):
            yield pair


def enumerate_V_cell(m: int, j: int, h: int, n: int) -> Iterator[PartitionPair]:
    for pair in enumerate_pairs(n):
        if v_statistics(pair, m) == (j, h):
            yield pair
