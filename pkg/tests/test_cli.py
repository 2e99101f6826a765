import io
import json

import pytest

from sptlab import bijections, qseries, ranks, spt
from sptlab.cli import main
from sptlab.doubly_marked import ColumnMarkedPartition as CMP


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("which", ["2.1", "3.1", "3.2"])
def test_tables_match_golden(which, golden_dir):
    code, text, _ = run("table", which)
    assert code == 0
    expected = (golden_dir / f"table_{which.replace('.', '_')}.tsv").read_bytes()
    assert text.encode("utf-8") == expected


@pytest.mark.parametrize("which", ["2.1", "3.1", "3.2"])
def test_tables_are_deterministic(which):
    assert run("table", which) == run("table", which)


def test_table_json():
    code, text, _ = run("table", "3.1", "--format", "json")
    data = json.loads(text)
    assert code == 0 and len(data["rows"]) == 10


@pytest.mark.parametrize("method", ["weighted", "marked", "s-partitions", "moments", "series"])
def test_spt_methods(method):
    for n, value in [(4, 10), (5, 14), (6, 26)]:
        assert run("spt", str(n), "--method", method) == (0, f"{value}\n", "")
    code, text, _ = run("spt", "5", "--method", method, "--format", "json")
    assert json.loads(text) == {"n": 5, "method": method, "spt": 14}


def test_spt_series_beyond_default_order():
    assert run("spt", "45", "--method", "series")[1] == run("spt", "45")[1]


def test_s_partition_cap_is_a_domain_error():
    code, _, err = run("spt", "19", "--method", "s-partitions")
    assert code == 3 and "--s-partition-cap" in err
    assert run("spt", "19", "--method", "s-partitions", "--s-partition-cap", "19")[0] == 0


def test_domain_and_parse_errors():
    assert run("spt", "0")[0] == 3
    assert run("spt", "-2")[0] == 3
    assert run("spt", "x")[0] == 2
    assert run("table", "9.9")[0] == 2
    assert run("bogus")[0] == 2
    assert run("classes", "4", "--modulus", "0")[0] == 3
    assert run("spt", "4", "--series-order", "-1")[0] == 2


def test_classes_tsv():
    code, text, _ = run("classes", "4", "--modulus", "5")
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == "# sizes\t2,2,2,2,2"
    assert len(lines) == 12


@pytest.mark.parametrize("n, t", [(9, 5), (12, 7)])
def test_classes_json(n, t):
    code, text, _ = run("classes", str(n), "--modulus", str(t), "--format", "json")
    data = json.loads(text)
    sizes = [len(data["classes"][str(r)]) for r in range(t)]
    assert code == 0 and len(set(sizes)) == 1
    for r, entries in data["classes"].items():
        assert all(e["crank"] % t == int(r) for e in entries)


def test_classes_failure_exit(monkeypatch):
    real = bijections.crank_entries

    def lopsided(n):
        entries = list(real(n))
        return entries[:-1]

    monkeypatch.setattr(bijections, "crank_entries", lopsided)
    code, _, err = run("classes", "4", "--modulus", "5")
    assert code == 1 and "not equinumerous" in err


def test_map_delta_with_trace():
    code, text, _ = run("map", "delta", '{"parts":[2,1,1,1,1],"k":5}', "--trace")
    data = json.loads(text)
    assert code == 0
    assert data["result"] == {"parts": [2, 2, 1, 1], "s": 2, "t": 2}
    steps = [CMP.from_json(s) for s in data["trace"]["steps"]]
    assert steps[0] == CMP((5, 1), 1, 5) and len(steps) == 4


def test_map_lambda():
    code, text, _ = run("map", "lambda", '{"parts":[1,1,1,1],"s":1,"t":1}')
    assert code == 0 and json.loads(text) == {"parts": [4], "k": 1}
    code, text, _ = run("map", "lambda", '{"parts":[2,2],"s":2,"t":2}', "--format", "tsv")
    assert text == "((2,1,1),3)\n"


def test_map_errors():
    code, _, err = run("map", "delta", '{"parts":[2,1,')
    assert code == 2 and "line 1" in err
    assert run("map", "delta", '{"parts":[4,1],"k":1}')[0] == 3
    assert run("map", "lambda", '{"parts":[3,2,1],"s":1,"t":2}')[0] == 3


def test_verify_passes():
    code, text, _ = run("verify", "--suite", "congruences")
    assert code == 0
    assert text.splitlines()[-1] == "overall\tPASS"
    code, text, _ = run("verify", "--suite", "obrien", "--format", "json")
    assert json.loads(text)["overall"] is True


def test_verify_max_n():
    code, text, _ = run("verify", "--suite", "dyson", "--max-n", "9", "--format", "json")
    assert code == 0
    assert all("9" in c["range"] for c in json.loads(text)["checks"])


def _shift(fn, n0):
    return lambda n: fn(n) + (n == n0)


@pytest.mark.parametrize(
    "module, name, make, suite",
    [
        (ranks, "partition_count", lambda f: _shift(f, 9), "congruences"),
        (spt, "spt_weighted", lambda f: _shift(f, 14), "congruences"),
        (spt, "ns_recurrence", lambda f: (lambda m, n: f(m, n) - (m == 2 and n == 7)), "recurrence"),
        (qseries, "gf_spt_alt", lambda f: (lambda N=None: f(N) + qseries.TruncatedSeries.monomial(7, f(N).order)), "gf"),
        (bijections, "tau", lambda f: (lambda x: f(x)._replace(t=1)), "bijections"),
    ],
)
def test_verify_catches_mutations(monkeypatch, module, name, make, suite):
    monkeypatch.setattr(module, name, make(getattr(module, name)))
    code, text, _ = run("verify", "--suite", suite)
    assert code == 1
    assert "FAIL" in text and text.splitlines()[-1] == "overall\tFAIL"
