"""Dyson rank counts, rank moments, p(n), and the mod-13 rank identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import DomainError, InvariantViolation
from .partitions import partitions_of, rank


@dataclass(frozen=True)
class RankTable:
    n: int
    counts: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"n": self.n, "counts": {str(m): c for m, c in sorted(self.counts.items())}}

    @classmethod
    def from_json(cls, data) -> "RankTable":
        return cls(int(data["n"]), {int(m): int(c) for m, c in data["counts"].items()})


_P = [1]


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence; p(n) = 0 for n < 0."""
    if n < 0:
        return 0
    while len(_P) <= n:
        k = len(_P)
        total = 0
        i = 1
        while True:
            g1 = i * (3 * i - 1) // 2
            if g1 > k:
                break
            sign = 1 if i % 2 else -1
            total += sign * _P[k - g1]
            g2 = g1 + i
            if g2 <= k:
                total += sign * _P[k - g2]
            i += 1
        _P.append(total)
    return _P[n]


@lru_cache(maxsize=None)
def _rank_counts(n: int) -> tuple:
    counts: dict[int, int] = {}
    for lam in partitions_of(n):
        r = rank(lam)
        counts[r] = counts.get(r, 0) + 1
    return tuple(sorted(counts.items()))


def rank_counts(n: int) -> RankTable:
    """N(m, n) for every m, by enumerating the partitions of ``n``."""
    if n < 1:
        raise DomainError("rank counts need n >= 1 (the rank of the empty partition is undefined)")
    return RankTable(n, dict(_rank_counts(n)))


def rank_count_mod(i: int, t: int, n: int) -> int:
    """N(i, t, n): partitions of ``n`` with rank congruent to ``i`` mod ``t``."""
    if t < 1:
        raise DomainError(f"modulus must be positive, got {t}")
    if not 0 <= i < t:
        raise DomainError(f"residue {i} not in [0, {t})")
    return sum(c for m, c in _rank_counts_checked(n) if m % t == i)


def _rank_counts_checked(n):
    if n < 1:
        raise DomainError("rank counts need n >= 1")
    return _rank_counts(n)


def rank_moment(k: int, n: int) -> int:
    """N_k(n) = sum over m of m**k * N(m, n)."""
    if k < 0:
        raise DomainError("moment order must be nonnegative")
    return sum(m**k * c for m, c in _rank_counts_checked(n))


def spt_via_moments(n: int) -> int:
    """spt(n) = n p(n) - N_2(n) / 2."""
    second = rank_moment(2, n)
    if second % 2:
        raise InvariantViolation(f"second rank moment of {n} is odd ({second})")
    return n * partition_count(n) - second // 2


@dataclass(frozen=True)
class ObrienVector:
    d: int
    n_index: int
    r: dict  # (a, b) -> N(a,13,13n+d) - N(b,13,13n+d)
    S: tuple  # S_1 .. S_5

    @property
    def first_sum(self) -> int:
        S1, S2, S3, S4, S5 = self.S
        return S1 + 2 * S2 - 5 * S5

    @property
    def second_sum(self) -> int:
        S1, S2, S3, S4, S5 = self.S
        return S2 + 5 * S3 + 3 * S4 + 3 * S5


def obrien_vector(n_index: int, d: int = 6) -> ObrienVector:
    """Coefficient of q^(13 n_index) in r_{a,b}(d) and S_1(d)..S_5(d)."""
    if n_index < 0:
        raise DomainError("n_index must be nonnegative")
    w = 13 * n_index + d
    N = [rank_count_mod(a, 13, w) for a in range(13)]
    pairs = [(i - 1, i) for i in range(1, 6)] + [(5, 6)]
    r = {(a, b): N[a] - N[b] for a, b in pairs}
    S = tuple(r[(i - 1, i)] - (7 - i) * r[(5, 6)] for i in range(1, 6))
    return ObrienVector(d, n_index, r, S)


def obrien_check(n_index: int) -> tuple[bool, bool]:
    vec = obrien_vector(n_index)
    return vec.first_sum % 13 == 0, vec.second_sum % 13 == 0
