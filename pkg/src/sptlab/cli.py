"""``sptlab`` command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bijections, qseries, ranks, spt, tables, verify
from .doubly_marked import ColumnMarkedPartition
from .errors import CapacityError, DomainError
from .spt import MarkedPartition

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3

SPT_METHODS = ("weighted", "marked", "s-partitions", "moments", "series")


class ParseError(Exception):
    pass


def _common(default_format="tsv"):
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=("tsv", "json", "pretty"), default=default_format)
    parent.add_argument("--max-n", type=int, default=None, help="upper weight bound for enumerations and checks")
    parent.add_argument(
        "--s-partition-cap",
        type=int,
        default=spt.S_PARTITION_CAP,
        help=f"largest weight for brute-force S-partition enumeration (default {spt.S_PARTITION_CAP})",
    )
    parent.add_argument(
        "--series-order",
        type=int,
        default=None,
        help=f"truncation order for series (default $SPTLAB_SERIES_ORDER or {qseries.DEFAULT_ORDER})",
    )
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sptlab", description="spt-function, spt-crank and marked-partition toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spt", parents=[_common()], help="compute spt(n)")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=SPT_METHODS, default="weighted")

    p = sub.add_parser("table", parents=[_common()], help="reproduce a reference table")
    p.add_argument("which", choices=tables.TABLE_IDS)

    p = sub.add_parser("classes", parents=[_common()], help="split marked partitions by spt-crank residue")
    p.add_argument("n", type=int)
    p.add_argument("--modulus", type=int, default=5)

    p = sub.add_parser("map", parents=[_common("json")], help="apply Delta or its inverse Lambda")
    p.add_argument("direction", choices=("delta", "lambda"))
    p.add_argument("object", help="JSON object: marked partition for delta, doubly marked for lambda")
    p.add_argument("--trace", action="store_true", help="also emit the full tau/sigma orbit")

    p = sub.add_parser("verify", parents=[_common()], help="run invariant suites")
    p.add_argument("--suite", choices=verify.SUITES, default="all")
    return parser


def cmd_spt(args, out) -> int:
    n, method = args.n, args.method
    if n < 1:
        raise DomainError("spt(n) needs n >= 1")
    if method == "weighted":
        value = spt.spt_weighted(n)
    elif method == "marked":
        value = sum(1 for _ in spt.enumerate_marked(n))
    elif method == "s-partitions":
        value = sum(spt.s_partition_net_counts(n, args.s_partition_cap).net.values())
    elif method == "moments":
        value = ranks.spt_via_moments(n)
    else:
        order = max(n, qseries.default_order() if args.series_order is None else args.series_order)
        value = qseries.gf_spt(order)[n]
    if args.format == "json":
        out.write(json.dumps({"n": n, "method": method, "spt": value}) + "\n")
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    out.write(tables.render_table(args.which, args.format))
    return EXIT_OK


def _expects_equal_classes(n, modulus) -> bool:
    return (modulus == 5 and n % 5 == 4) or (modulus == 7 and n % 7 == 5)


def cmd_classes(args, out, err) -> int:
    if args.modulus < 1:
        raise DomainError("modulus must be positive")
    report = bijections.crank_classes(args.n, args.modulus)
    if args.format == "json":
        out.write(json.dumps(report.to_json(), indent=2) + "\n")
    elif args.format == "pretty":
        out.write(f"n={report.n} modulus={report.modulus} sizes={report.sizes}\n")
        for r in range(report.modulus):
            out.write(f"class {r} ({len(report.classes[r])}):\n")
            for e in report.classes[r]:
                out.write(f"  {tables.fmt_marked(e.marked)} -> {tables.fmt_dmp(e.dmp)}  crank {e.crank}\n")
    else:
        out.write(f"# sizes\t{','.join(map(str, report.sizes))}\n")
        out.write("residue\t(mu,k)\t(lambda,s,t)\tcrank\n")
        for r in range(report.modulus):
            for e in report.classes[r]:
                out.write(f"{r}\t{tables.fmt_marked(e.marked)}\t{tables.fmt_dmp(e.dmp)}\t{e.crank}\n")
    if _expects_equal_classes(args.n, args.modulus) and not report.equinumerous:
        err.write(f"classes of n={args.n} mod {args.modulus} are not equinumerous: {report.sizes}\n")
        return EXIT_FAIL
    return EXIT_OK


def _parse_object(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON at line {exc.lineno} column {exc.colno} (char {exc.pos}): {exc.msg}")


def cmd_map(args, out) -> int:
    data = _parse_object(args.object)
    if args.direction == "delta":
        result, trace = bijections.delta_with_trace(MarkedPartition.from_json(data))
    else:
        x = ColumnMarkedPartition.from_json(data)
        result, trace = bijections.lambda_with_trace(x)
    if args.format == "json":
        payload = {"result": result.to_json(), "trace": trace.to_json()} if args.trace else result.to_json()
        out.write(json.dumps(payload) + "\n")
        return EXIT_OK
    fmt = tables.fmt_marked if isinstance(result, MarkedPartition) else tables.fmt_dmp
    if args.trace:
        steps = [tables.fmt_dmp(s) for s in trace.steps]
        if args.format == "pretty":
            out.write(" -> ".join(steps) + f"  ({trace.step_count} steps)\n")
        else:
            out.write("step\tobject\n")
            out.writelines(f"{i}\t{s}\n" for i, s in enumerate(steps))
    out.write(fmt(result) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    report = verify.run(args.suite, args.max_n, args.s_partition_cap)
    if args.format == "json":
        out.write(json.dumps(report.to_json(), indent=2) + "\n")
    else:
        sep = "\t" if args.format == "tsv" else "  "
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            line = sep.join([status, c.name, c.range])
            if not c.passed:
                line += sep + json.dumps(c.counterexample)
            out.write(line + "\n")
        out.write(f"overall{sep}{'PASS' if report.overall else 'FAIL'}\n")
    return EXIT_OK if report.overall else EXIT_FAIL


def main(argv=None, out=None, err=None) -> int:
    try:
        return _main(argv, out, err)
    except BrokenPipeError:
        # Downstream closed early (e.g. piped into head); not an error.
        sys.stdout = open(os.devnull, "w")
        return EXIT_OK


def _main(argv, out, err) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.series_order is not None:
        if args.series_order < 0:
            err.write("sptlab: --series-order must be nonnegative\n")
            return EXIT_PARSE
    try:
        if args.command == "spt":
            return cmd_spt(args, out)
        if args.command == "table":
            return cmd_table(args, out)
        if args.command == "classes":
            return cmd_classes(args, out, err)
        if args.command == "map":
            return cmd_map(args, out)
        return cmd_verify(args, out)
    except ParseError as exc:
        err.write(f"sptlab: {exc}\n")
        return EXIT_PARSE
    except CapacityError as exc:
        err.write(f"sptlab: {exc}\n")
        return EXIT_DOMAIN
    except DomainError as exc:
        err.write(f"sptlab: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
