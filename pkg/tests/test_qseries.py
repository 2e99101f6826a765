import itertools

import pytest

from conftest import SPT_VALUES, oracle_p, oracle_partitions
from sptlab.doubly_marked import dmp_crank_counts, enumerate_pairs, v_memberships
from sptlab.errors import DomainError
from sptlab.qseries import (
    TruncatedSeries as TS,
    gaussian_binomial,
    gf_NS,
    gf_spt,
    gf_spt_alt,
    gf_V_cell,
    pochhammer,
    series_add,
    series_inverse,
    series_mul,
    series_scale,
)
from sptlab.spt import ns_recurrence, spt_weighted

N = 12


def test_ring_examples():
    ones = TS([1] * (N + 1), N)
    one_minus_q = TS([1, -1], N)
    assert series_mul(one_minus_q, ones) == TS.one(N)
    assert series_add(ones, series_scale(ones, -1)) == TS.zero(N)
    assert (ones * ones)[5] == 6


def test_order_mismatch():
    with pytest.raises(DomainError):
        TS.one(3) + TS.one(4)
    with pytest.raises(DomainError):
        TS.one(3) * TS.one(4)


def test_pochhammer_examples():
    assert pochhammer(2, 1, 5).coeffs == (1, -1, -1, 1, 0, 0)
    assert pochhammer(0, 1, 5) == TS.one(5)
    assert series_inverse(pochhammer(None, 1, 10))[4] == 5
    with pytest.raises(DomainError):
        pochhammer(3, 0, 5)


def test_inverse_examples():
    assert series_inverse(TS([1, -1], 8)) == TS([1] * 9, 8)
    assert series_inverse(TS.one(8)) == TS.one(8)
    euler = series_inverse(pochhammer(None, 1, 40))
    assert list(euler) == [oracle_p(n) for n in range(41)]
    with pytest.raises(DomainError):
        series_inverse(TS([2, 1], 5))


@pytest.mark.parametrize("order", [0, 1, 7, 25])
def test_inverse_identity(order):
    for f in (pochhammer(None, 1, order), pochhammer(4, 2, order), TS([-1, 3, 0, -2, 5], order)):
        assert f * series_inverse(f) == TS.one(order)


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 1, 5).coeffs[:3] == (1, 1, 0)
    assert gaussian_binomial(7, 0, 5) == TS.one(5)
    assert gaussian_binomial(4, 2, 6).coeffs == (1, 1, 2, 1, 1, 0, 0)
    with pytest.raises(DomainError):
        gaussian_binomial(3, 4, 5)


def test_gaussian_binomial_counts_box_partitions():
    for top in range(9):
        for bottom in range(top + 1):
            width = top - bottom
            series = gaussian_binomial(top, bottom, bottom * width)
            for w in range(bottom * width + 1):
                box = sum(1 for lam in oracle_partitions(w) if len(lam) <= bottom and (not lam or lam[0] <= width))
                assert series[w] == box


def test_gf_spt_examples():
    g = gf_spt(40)
    assert g[4] == 10 and g[5] == 14 and g[1] == 1
    alt = gf_spt_alt(40)
    assert alt == g
    assert alt[2] == 3


def test_gf_spt_termwise():
    g = gf_spt(40)
    assert list(g)[1:21] == SPT_VALUES
    assert all(g[n] == spt_weighted(n) for n in range(1, 41))


def test_gf_ns_examples():
    assert gf_NS(3, 10)[4] == 1
    assert gf_NS(0, 10)[4] == 2
    for m in range(-8, 9):
        assert gf_NS(m, 12)[abs(m) + 1] == 1


def test_gf_ns_matches_counts():
    for m in range(-10, 11):
        g = gf_NS(m, 30)
        for n in range(1, 31):
            assert g[n] == dmp_crank_counts(n).get(m, 0) == ns_recurrence(m, n)


def test_gf_ns_sums_to_spt():
    M = 20
    total = TS.zero(M)
    for m in range(-M, M + 1):
        total = total + gf_NS(m, M)
    assert list(total)[1:] == SPT_VALUES[:M]


def test_gf_v_cell_examples():
    assert list(gf_V_cell(0, 0, 0, 10)) == [0] + [1] * 10
    with pytest.raises(DomainError):
        gf_V_cell(1, 1, 2, 10)
    assert gf_V_cell(-3, 2, 0, 10) == TS.zero(10)


def test_gf_v_cells_resum_to_gf_ns():
    total = TS.zero(20)
    for j, h in itertools.product(range(10), range(10)):
        if h <= j:
            total = total + gf_V_cell(1, j, h, 20)
    assert total == gf_NS(1, 20)


def test_gf_v_cell_matches_enumeration():
    counts = {}
    for n in range(1, 17):
        for pair in enumerate_pairs(n):
            for key in v_memberships(pair):
                counts[key + (n,)] = counts.get(key + (n,), 0) + 1
    cells = {k[:3] for k in counts} | {(m, j, h) for m in range(-3, 4) for j in range(4) for h in range(j + 1)}
    for m, j, h in cells:
        series = gf_V_cell(m, j, h, 16)
        for n in range(1, 17):
            assert series[n] == counts.get((m, j, h, n), 0), (m, j, h, n)


def test_json_round_trip():
    s = TS([1, -2, 10**30], 3)
    data = s.to_json()
    assert data == {"order": 3, "coeffs": ["1", "-2", str(10**30), "0"]}
    assert TS.from_json(data) == s


def test_env_order(monkeypatch):
    monkeypatch.setenv("SPTLAB_SERIES_ORDER", "12")
    assert gf_spt().order == 12
    monkeypatch.delenv("SPTLAB_SERIES_ORDER")
    assert gf_spt().order == 40
