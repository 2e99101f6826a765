"""Independent oracles shared by the test modules.

These deliberately avoid the library's own enumeration and recurrence code.
"""

from pathlib import Path

import pytest
from hypothesis import strategies as st

GOLDEN = Path(__file__).parent / "golden"


def _ascending(n, least):
    if n == 0:
        yield []
        return
    for first in range(least, n + 1):
        for rest in _ascending(n - first, first):
            yield [first] + rest


def oracle_partitions(n):
    """All partitions of n built smallest-part-first, as a set of tuples."""
    return {tuple(reversed(p)) for p in _ascending(n, 1)}


def oracle_p(n):
    """p(n) by the coin-change dynamic programme."""
    ways = [1] + [0] * n
    for coin in range(1, n + 1):
        for total in range(coin, n + 1):
            ways[total] += ways[total - coin]
    return ways[n]


def oracle_spt(n):
    return sum(p.count(p[-1]) for p in oracle_partitions(n))


def oracle_s_partitions(n):
    def smallest(p):
        return p[-1] if p else float("inf")

    out = set()
    for w1 in range(1, n + 1):
        for p1 in oracle_partitions(w1):
            if len(set(p1)) != len(p1):
                continue
            for w2 in range(0, n - w1 + 1):
                for p2 in oracle_partitions(w2):
                    for p3 in oracle_partitions(n - w1 - w2):
                        if smallest(p1) <= min(smallest(p2), smallest(p3)):
                            out.add((p1, p2, p3))
    return out


def oracle_dmp(n):
    """Doubly marked partitions straight from the definition."""
    out = set()
    for lam in oracle_partitions(n):
        col = lambda j: sum(1 for x in lam if x >= j)
        durfee = max([d for d in range(1, len(lam) + 1) if lam[d - 1] >= d], default=0)
        for s in range(1, n + 1):
            for t in range(1, n + 1):
                if 1 <= s <= durfee and s <= t <= lam[0] and col(s) == col(t):
                    out.add((lam, s, t))
    return out


# spt(1..20), computed with oracle_spt and frozen; test_oracles re-derives them.
SPT_VALUES = [1, 3, 5, 10, 14, 26, 35, 57, 80, 119, 161, 238, 315, 440, 589, 801, 1048, 1407, 1820, 2399]


@st.composite
def partitions_st(draw, max_weight=30):
    parts = draw(st.lists(st.integers(1, 12), max_size=12))
    parts = sorted(parts, reverse=True)
    while sum(parts) > max_weight:
        parts.pop(0)
    return tuple(parts)


@pytest.fixture
def golden_dir():
    return GOLDEN


def oracle_s_net(n):
    """Signed count of S-partitions of n by crank, from the triples themselves."""
    net = {}
    for p1, p2, p3 in oracle_s_partitions(n):
        c = len(p2) - len(p3)
        net[c] = net.get(c, 0) + (-1) ** (len(p1) - 1)
    return {c: v for c, v in net.items() if v}
