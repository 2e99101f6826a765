"""Row builders and renderers for the n=4 / n=5 reference tables."""

from __future__ import annotations

import json
from itertools import groupby

from .bijections import crank_entries
from .doubly_marked import enumerate_dmp, spt_crank_dmp
from .partitions import format_partition, smallest_part
from .spt import enumerate_s_partitions

TABLE_IDS = ("2.1", "3.1", "3.2")


def fmt_marked(mp) -> str:
    return f"({format_partition(mp.parts)},{mp.k})"


def fmt_dmp(x) -> str:
    return f"({format_partition(x.parts)},{x.s},{x.t})"


def fmt_s_partition(sp) -> str:
    return "(" + ",".join(format_partition(p) for p in sp) + ")"


def fmt_sign(sign: int) -> str:
    return "+1" if sign > 0 else "-1"


def _s_partition_key(sp):
    # Cranks descending; ties broken to match the reference n=4 table.
    return (-sp.crank, smallest_part(sp.pi1), sum(sp.pi1), -len(sp.pi3), sum(sp.pi3))


def table_2_1_rows(n: int = 4) -> list:
    """Side-by-side rows: S-partitions and doubly marked partitions grouped by crank."""
    s_parts = sorted(enumerate_s_partitions(n), key=_s_partition_key)
    dmps = sorted(((spt_crank_dmp(x), x) for x in enumerate_dmp(n)), key=lambda cx: (-cx[0], cx[1].t, cx[1].s))
    by_crank = {c: [x for _, x in group] for c, group in groupby(dmps, key=lambda cx: cx[0])}
    rows = []
    for crank, group in groupby(s_parts, key=lambda sp: sp.crank):
        group = list(group)
        partners = by_crank.pop(crank, [])
        height = max(len(group), len(partners))
        for i in range(height):
            sp = group[i] if i < len(group) else None
            x = partners[i] if i < len(partners) else None
            rows.append(
                (
                    fmt_s_partition(sp) if sp else "",
                    fmt_sign(sp.sign) if sp else "",
                    str(sp.crank) if sp else "",
                    fmt_dmp(x) if x else "",
                    str(crank) if x else "",
                )
            )
    return rows


def table_3_rows(n: int, modulus: int) -> list:
    return [(fmt_marked(e.marked), fmt_dmp(e.dmp), str(e.crank), str(e.crank % modulus)) for e in crank_entries(n)]


HEADERS = {
    "2.1": ("S-partition", "sign", "spt-crank", "doubly marked partition", "spt-crank"),
    "3.1": ("(mu,k)", "(lambda,s,t)", "c(lambda,s,t)", "c mod 5"),
    "3.2": ("(mu,k)", "(lambda,s,t)", "c(lambda,s,t)", "c mod 7"),
}


def table_rows(which: str) -> list:
    if which == "2.1":
        return table_2_1_rows(4)
    if which == "3.1":
        return table_3_rows(4, 5)
    if which == "3.2":
        return table_3_rows(5, 7)
    raise KeyError(which)


def render_tsv(header, rows) -> str:
    return "".join("\t".join(r) + "\n" for r in [header, *rows])


def render_pretty(header, rows) -> str:
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in [header, *rows]]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def table_json(which: str) -> dict:
    if which == "2.1":
        s_parts = sorted(enumerate_s_partitions(4), key=_s_partition_key)
        dmps = sorted(enumerate_dmp(4), key=lambda x: (-spt_crank_dmp(x), x.t, x.s))
        return {
            "table": which,
            "s_partitions": [{**sp.to_json(), "sign": sp.sign, "crank": sp.crank} for sp in s_parts],
            "doubly_marked": [{**x.to_json(), "crank": spt_crank_dmp(x)} for x in dmps],
        }
    n, modulus = (4, 5) if which == "3.1" else (5, 7)
    return {
        "table": which,
        "n": n,
        "modulus": modulus,
        "rows": [{**e.to_json(), "residue": e.crank % modulus} for e in crank_entries(n)],
    }


def render_table(which: str, fmt: str) -> str:
    if which not in TABLE_IDS:
        raise KeyError(which)
    if fmt == "json":
        return json.dumps(table_json(which), indent=2) + "\n"
    rows = table_rows(which)
    if fmt == "pretty":
        return render_pretty(HEADERS[which], rows)
    return render_tsv(HEADERS[which], rows)
