import math

import pytest
from hypothesis import given

from conftest import oracle_p, oracle_partitions, partitions_st
from sptlab.errors import DomainError
from sptlab.partitions import (
    INFINITY,
    conjugate,
    durfee_side,
    enumerate_distinct_partitions,
    enumerate_partitions,
    from_json,
    m_durfee_width,
    make_partition,
    rank,
    rank_set_contains,
    smallest_part,
    to_json,
)


def test_enumerate_zero():
    assert list(enumerate_partitions(0)) == [()]


def test_enumerate_four_in_reverse_lex_order():
    assert list(enumerate_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumerate_nine_has_thirty():
    assert sum(1 for _ in enumerate_partitions(9)) == 30


@pytest.mark.parametrize("n", range(0, 21))
def test_enumeration_matches_oracles(n):
    parts = list(enumerate_partitions(n))
    assert set(parts) == oracle_partitions(n)
    assert len(parts) == len(set(parts)) == oracle_p(n)
    assert parts == sorted(parts, reverse=True)


def test_enumeration_count_up_to_30():
    for n in range(31):
        assert sum(1 for _ in enumerate_partitions(n)) == oracle_p(n)


def test_distinct_partitions():
    assert list(enumerate_distinct_partitions(6)) == [(6,), (5, 1), (4, 2), (3, 2, 1)]


@pytest.mark.parametrize(
    "lam, expected",
    [((3, 2, 2), (3, 3, 1)), ((), ()), ((2, 1, 1, 1, 1), (5, 1))],
)
def test_conjugate(lam, expected):
    assert conjugate(lam) == expected


@pytest.mark.parametrize("lam, expected", [((3, 2, 2), 2), ((), 0), ((1, 1, 1, 1), 1)])
def test_durfee_side(lam, expected):
    assert durfee_side(lam) == expected


@pytest.mark.parametrize(
    "lam, m, expected",
    [
        ((5, 5, 4, 3, 1), 1, 3),
        ((3,), 2, 0),
        ((4, 4, 1, 1), 0, 2),
        # zero-row rectangles count, so negative m gives width >= -m
        ((), -2, 2),
        ((1,), -1, 1),
        ((5, 5, 4, 3, 1), -2, 4),
    ],
)
def test_m_durfee_width(lam, m, expected):
    assert m_durfee_width(lam, m) == expected


def brute_m_durfee(lam, m):
    best = 0
    for j in range(0, 40):
        rows = m + j
        if rows < 0:
            continue
        if rows == 0 or (rows <= len(lam) and lam[rows - 1] >= j):
            best = max(best, j)
    return best


@given(partitions_st())
def test_m_durfee_width_matches_rectangle_search(lam):
    for m in range(-6, 8):
        assert m_durfee_width(lam, m) == brute_m_durfee(lam, m)


@pytest.mark.parametrize("lam, expected", [((4,), 3), ((2, 2), 0), ((1, 1, 1, 1), -3)])
def test_rank(lam, expected):
    assert rank(lam) == expected


def test_rank_of_empty_is_domain_error():
    with pytest.raises(DomainError):
        rank(())


def test_rank_set_membership_worked_example():
    lam = (5, 5, 4, 3, 1)
    members = [m for m in range(-10, 9) if rank_set_contains(lam, m)]
    assert members == [-5, -4, -2, 0, 3, 5, 6, 7, 8]
    assert rank_set_contains(lam, -2)
    assert not rank_set_contains(lam, 1)


def test_rank_set_of_empty():
    assert rank_set_contains((), 0)
    assert not rank_set_contains((), -1)


def test_smallest_part():
    assert smallest_part((3, 2, 2)) == 2
    assert smallest_part(()) is INFINITY and math.isinf(smallest_part(()))
    assert smallest_part((5, 1)) == 1
    assert smallest_part(()) > 10**9


def test_make_partition_drops_zeros_and_rejects_bad_input():
    assert make_partition([4, 0]) == (4,)
    assert make_partition([]) == ()
    with pytest.raises(DomainError):
        make_partition([2, -1])
    with pytest.raises(DomainError):
        make_partition([1, 2])


def test_json_round_trip():
    assert to_json((3, 2, 2)) == [3, 2, 2]
    assert to_json(()) == []
    assert from_json([3, 2, 2]) == (3, 2, 2)
    with pytest.raises(DomainError):
        from_json({"parts": [1]})


@given(partitions_st())
def test_conjugate_properties(lam):
    lc = conjugate(lam)
    assert conjugate(lc) == lam
    assert sum(lc) == sum(lam)
    if lam:
        assert len(lc) == lam[0]
        assert rank(lc) == -rank(lam)


@given(partitions_st())
def test_durfee_is_zero_rectangle(lam):
    assert durfee_side(lam) == m_durfee_width(lam, 0)


@given(partitions_st())
def test_rank_set_tail(lam):
    for k in range(5):
        assert rank_set_contains(lam, len(lam) + k)
