"""Command-line front end.

Usage:
    jacobi-dims dim --group gammaN:8 --weight 3 --index 2 --format json
    jacobi-dims table --group gamma0:11 --weights 3..6 --indices 1..4 --format csv
    jacobi-dims check all
    jacobi-dims hurwitz --from -12 --to 0 --forms
    jacobi-dims scheme --group gamma1:4

Exit codes: 0 success, 1 a check suite failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import crosscheck
from .class_numbers import enumerate_reduced_forms, hurwitz_h1
from .dimensions import DimensionResult, dim_jacobi
from .errors import DomainError, NonIntegralDimensionError
from .exact_arith import Rational
from .groups import BranchingScheme, scheme_from_descriptor

CSV_HEADER = ["group", "k", "m", "value_num", "value_den", "plain"]


class UsageError(Exception):
    pass


def _parse_range(text: str, name: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise UsageError(f"{name} must look like A..B, got {text!r}") from None
    if hi_i < lo_i:
        raise UsageError(f"{name} range {text!r} is empty")
    return range(lo_i, hi_i + 1)


def _fmt_rational(q: Rational) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _record(group: str, scheme: BranchingScheme, k: int, m: int, res: DimensionResult) -> dict:
    return {"group": group, "scheme": scheme.to_dict(), "k": k, "m": m, **res.to_dict()}


def _evaluate(scheme: BranchingScheme, k: int, m: int) -> DimensionResult:
    try:
        return dim_jacobi(k, m, scheme)
    except NonIntegralDimensionError as exc:
        # only reachable for synthetic schemes that no subgroup realises
        raise DomainError(f"scheme is not the branching data of a subgroup: {exc}") from None


def _workers() -> int:
    raw = os.environ.get("JACOBI_DIM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"JACOBI_DIM_THREADS must be an integer, got {raw!r}") from None


def _write_records(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        payload = records[0] if len(records) == 1 else records
        json.dump(payload, out, indent=None)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in records:
            v = r["value"]
            writer.writerow([r["group"], r["k"], r["m"], v["num"], v["den"], str(r["plain"]).lower()])
    else:
        for r in records:
            value = Rational(r["value"]["num"], r["value"]["den"])
            note = "" if r["plain"] else "  (dim S - dim J^skew; skew correction not computed for k = 2)"
            if len(records) == 1:
                out.write(f"{_fmt_rational(value)}{note}\n")
            else:
                out.write(f"{r['group']}  k={r['k']:<3d} m={r['m']:<4d} {_fmt_rational(value)}{note}\n")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_dim(args) -> int:
    scheme = scheme_from_descriptor(args.group)
    res = _evaluate(scheme, args.weight, args.index)
    buf = io.StringIO()
    _write_records([_record(args.group, scheme, args.weight, args.index, res)], args.format, buf)
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_table(args) -> int:
    scheme = scheme_from_descriptor(args.group)
    grid = [(k, m) for k in _parse_range(args.weights, "--weights") for m in _parse_range(args.indices, "--indices")]
    workers = _workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda km: _evaluate(scheme, *km), grid))
    else:
        results = [_evaluate(scheme, k, m) for k, m in grid]
    records = [_record(args.group, scheme, k, m, r) for (k, m), r in zip(grid, results)]
    buf = io.StringIO()
    if args.format == "json":
        json.dump(records, buf)
        buf.write("\n")
    else:
        _write_records(records, args.format, buf)
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_check(args) -> int:
    runners = {
        "lemma": lambda: crosscheck.run_lemma_suite(args.max_a, args.max_f),
        "identity": lambda: crosscheck.run_identity_suite(args.max_k or 13, args.max_m or 60),
        "lifting": lambda: crosscheck.run_lifting_suite(),
        "equivalence": lambda: crosscheck.run_equivalence_suite(
            max_k=args.max_k or 12, max_m=args.max_m or 36, max_N=args.max_n, synthetic=args.synthetic, seed=args.seed
        ),
    }
    names = list(runners) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        report = runners[name]()
        reports.append(report)
        status = "PASS" if report.passed else "FAIL"
        print(
            f"{status} {name}: {report.checked - len(report.failures)}/{report.checked} checks passed, "
            f"worst error {report.worst_error:.3g}"
        )
        for failure in report.failures[:10]:
            print(f"  failed: {json.dumps(failure)}")
    summary = {
        "passed": all(r.passed for r in reports),
        "suites": [{k: v for k, v in r.to_dict().items() if k != "failures"} for r in reports],
    }
    print(json.dumps(summary))
    return 0 if summary["passed"] else 1


def cmd_hurwitz(args) -> int:
    lo, hi = args.from_, args.to
    if hi > 0 or lo > 0:
        raise DomainError("discriminants must be <= 0")
    if lo > hi:
        raise UsageError(f"empty range --from {lo} --to {hi}")
    rows = []
    for delta in range(hi, lo - 1, -1):
        h = hurwitz_h1(delta)
        forms = []
        if args.forms and delta < 0 and delta % 4 in (0, 1):
            forms = [tuple(f) for f in enumerate_reduced_forms(delta)]
        rows.append((delta, h, forms))
    buf = io.StringIO()
    if args.format == "json":
        payload = [
            {"delta": d, "H": {"num": h.numerator, "den": h.denominator}, **({"forms": [list(f) for f in fs]} if args.forms else {})}
            for d, h, fs in rows
        ]
        json.dump(payload, buf)
        buf.write("\n")
    elif args.format == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["delta", "H_num", "H_den"] + (["forms"] if args.forms else []))
        for d, h, fs in rows:
            extra = [" ".join(f"({a},{b},{c})" for a, b, c in fs)] if args.forms else []
            writer.writerow([d, h.numerator, h.denominator] + extra)
    else:
        for d, h, fs in rows:
            line = f"H({d}) = {_fmt_rational(h)}"
            if args.forms and fs:
                line += "   " + " ".join(f"({a},{b},{c})" for a, b, c in fs)
            buf.write(line + "\n")
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_scheme(args) -> int:
    scheme = scheme_from_descriptor(args.group)
    _emit(scheme.to_json() + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobi-dims",
        description="Dimensions of spaces of Jacobi cusp forms on finite-index subgroups of SL(2,Z).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    group_help = "gammaN:<N>, gamma0:<N>, gamma1:<N> or scheme:<path to JSON>"
    fmt = dict(choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("dim", help="dimension for one group, weight and index")
    p.add_argument("--group", required=True, help=group_help)
    p.add_argument("--weight", "-k", type=int, required=True)
    p.add_argument("--index", "-m", type=int, required=True)
    p.add_argument("--format", **fmt)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("table", help="dimensions over a grid of weights and indices")
    p.add_argument("--group", required=True, help=group_help)
    p.add_argument("--weights", required=True, help="range A..B")
    p.add_argument("--indices", required=True, help="range A..B")
    p.add_argument("--format", **fmt)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", help="run consistency suites")
    p.add_argument("suite", choices=["lemma", "identity", "lifting", "equivalence", "all"])
    p.add_argument("--max-a", type=int, default=36)
    p.add_argument("--max-f", type=int, default=36)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--max-n", type=int, default=16, help="largest N for Gamma(N) widths (equivalence)")
    p.add_argument("--synthetic", type=int, default=200, help="random width lists (equivalence)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hurwitz", help="table of Hurwitz class numbers")
    p.add_argument("--from", dest="from_", type=int, required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--forms", action="store_true", help="also list reduced forms")
    p.add_argument("--format", **fmt)
    p.add_argument("--out")
    p.set_defaults(func=cmd_hurwitz)

    p = sub.add_parser("scheme", help="print the branching scheme JSON of a group")
    p.add_argument("--group", required=True, help=group_help)
    p.add_argument("--out")
    p.set_defaults(func=cmd_scheme)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DomainError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
