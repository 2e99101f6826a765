"""Sanity checks on the oracles themselves, so a broken oracle cannot hide a broken library."""

from itertools import product

from conftest import SPT_VALUES, oracle_p, oracle_partitions, oracle_spt


def _compositions_sorted(n):
    # Every multiset of positive parts summing to n, via bounded multiplicities.
    out = set()
    for mults in product(*(range(n // i + 1) for i in range(1, n + 1))):
        if sum(i * m for i, m in zip(range(1, n + 1), mults)) == n:
            out.add(tuple(sorted((i for i, m in zip(range(1, n + 1), mults) for _ in range(m)), reverse=True)))
    return out


def test_oracle_partitions_small():
    assert oracle_partitions(4) == {(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}
    assert oracle_partitions(0) == {()}
    for n in range(1, 9):
        assert oracle_partitions(n) == _compositions_sorted(n)


def test_oracle_p():
    assert [oracle_p(n) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert all(oracle_p(n) == len(oracle_partitions(n)) for n in range(1, 20))


def test_frozen_spt_values():
    assert [oracle_spt(n) for n in range(1, 21)] == SPT_VALUES
