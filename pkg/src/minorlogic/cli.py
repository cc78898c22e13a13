"""Command-line interface.

Verbs: analyze, mdd, classify, orbits, parse, verify.  Reports are JSON,
partitions export as CSV or JSON, diagrams as DOT.  Exit codes: 0 on
success, 1 when verification finds a mismatch, 2 on usage or domain
errors.
"""

import argparse
import json
import sys

from . import classify, groups, mdd, rse, subodd, verify
from .fncore import FunctionTable, decode, encode, essential_vars
from .reductions import (
    all_subfunctions,
    arity_gap,
    minors_closure,
    nof,
    separable_sets,
    strongly_essential,
)


def _load_function(args) -> FunctionTable:
    if (args.code is None) == (args.rse is None):
        raise ValueError("give exactly one of --code and --rse")
    if args.rse is not None:
        return rse.parse(args.rse, args.k, args.n)
    return decode(args.code, args.k, args.n)


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def analysis_report(f: FunctionTable, skip=()) -> dict:
    """Everything the library knows about one function, recomputable from
    (k, n, code)."""
    ess_set = sorted(essential_vars(f))
    minor_set = minors_closure(f)
    report = {
        "k": f.k,
        "n": f.n,
        "code": f.code,
        "rse": rse.format_miniterms(f),
        "ess": f.ess,
        "essential_vars": ess_set,
        "gap": None,
        "gap_reason": None,
        "nof": nof(f).code,
        "cmr": mdd.cmr(f),
        "mnr": minor_set.count,
        "mnr_by_ess": list(minor_set.by_ess),
        "sub": None,
        "sep": None,
        "separable_sets": None,
        "imp": None,
        "strongly_essential": sorted(strongly_essential(f)),
    }
    if f.ess >= 2:
        report["gap"] = arity_gap(f)
    else:
        report["gap_reason"] = "needs at least two essential variables"
    if "sub" not in skip:
        report["sub"] = all_subfunctions(f).count
        seps = separable_sets(f)
        report["sep"] = len(seps)
        report["separable_sets"] = sorted(sorted(s) for s in seps)
    if "imp" not in skip:
        report["imp"] = subodd.imp_count(f)
    return report


def _cmd_analyze(args) -> int:
    f = _load_function(args)
    report = analysis_report(f, skip=set(args.skip or ()))
    _write(json.dumps(report, indent=2), args.out)
    return 0


def _cmd_mdd(args) -> int:
    f = _load_function(args)
    _write(mdd.to_dot(mdd.build_mdd(f)), args.out)
    return 0


def _guard(args):
    return None if args.unsafe_large else classify.DEFAULT_MAX_FUNCTIONS


def _export_partition(partition, args) -> int:
    if args.format == "csv":
        text = classify.partition_to_csv(partition, args.zero_preserving)
    else:
        text = json.dumps(
            classify.partition_to_json_obj(partition, args.zero_preserving),
            indent=2,
        )
    _write(text, args.out)
    return 0


def _cmd_classify(args) -> int:
    partition = classify.partition_space(
        args.k, args.n, args.relation, jobs=args.jobs, max_functions=_guard(args)
    )
    return _export_partition(partition, args)


def _cmd_orbits(args) -> int:
    partition = groups.orbits(
        args.k,
        args.n,
        groups.SubgroupKind(args.group),
        jobs=args.jobs,
        max_functions=_guard(args),
    )
    return _export_partition(partition, args)


def _cmd_parse(args) -> int:
    f = rse.parse(args.rse, args.k, args.n)
    code = encode(f)
    _write(
        json.dumps(
            {
                "k": f.k,
                "n": f.n,
                "code": code.code,
                "digits": code.digits(),
                "ess": f.ess,
                "rse": rse.format_miniterms(f),
            },
            indent=2,
        ),
        args.out,
    )
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        for suite_id in verify.SUITES:
            print(suite_id)
        return 0
    results = verify.run_suites(args.suite or None)
    for result in results:
        for check in result.checks:
            print(check.line())
        print(
            f"suite {result.suite}: "
            f"{sum(1 for c in result.checks if c.status == verify.PASS)} pass, "
            f"{result.failed} fail, {result.warned} warn "
            f"({result.elapsed:.2f}s)"
        )
    summary = verify.report(results)
    if args.json:
        _write(json.dumps(summary, indent=2), args.json)
    total_fail = sum(r.failed for r in results)
    print(f"TOTAL: {'ok' if total_fail == 0 else f'{total_fail} failing checks'}")
    return 0 if total_fail == 0 else 1


def _add_function_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=int, required=True, help="radix, at least 2")
    parser.add_argument("--n", type=int, required=True, help="variable count")
    parser.add_argument(
        "--code",
        help="catalogue code: decimal integer, or a base-k digit row of "
        "length k**n (leftmost digit = all-zero point)",
    )
    parser.add_argument("--rse", help="ring-sum expression, e.g. 'x1^0x2 + x1x3'")


def _add_export_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument(
        "--zero-preserving",
        action="store_true",
        help="restrict member lists to codes fixing the all-zero point to 0",
    )
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    parser.add_argument(
        "--unsafe-large",
        action="store_true",
        help="drop the k**(k**n) space-size guard",
    )
    parser.add_argument("--out", help="output path ('-' for stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minorlogic",
        description="Truth-table analysis and classification of k-valued "
        "functions by their identification-minor structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full JSON report for one function")
    _add_function_args(p)
    p.add_argument(
        "--skip",
        action="append",
        choices=("imp", "sub"),
        help="skip an expensive metric (skipping sub also skips sep)",
    )
    p.add_argument("--out", help="output path ('-' for stdout)")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("mdd", help="minor decision diagram as DOT")
    _add_function_args(p)
    p.add_argument("--out", "--dot", dest="out", help="output path ('-' for stdout)")
    p.set_defaults(handler=_cmd_mdd)

    p = sub.add_parser("classify", help="partition P_k^n by an equivalence")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--relation", choices=classify.RELATIONS, required=True)
    _add_export_args(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("orbits", help="orbit partition of P_k^n under a group")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--group",
        choices=[kind.value for kind in groups.SubgroupKind],
        required=True,
    )
    _add_export_args(p)
    p.set_defaults(handler=_cmd_orbits)

    p = sub.add_parser("parse", help="parse a ring-sum expression to a code")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rse", required=True)
    p.add_argument("--out", help="output path ('-' for stdout)")
    p.set_defaults(handler=_cmd_parse)

    p = sub.add_parser("verify", help="run the reference verification suites")
    p.add_argument(
        "--suite",
        action="append",
        choices=list(verify.SUITES),
        help="run one suite (repeatable); default runs all",
    )
    p.add_argument("--json", help="also write the full report as JSON")
    p.add_argument("--list", action="store_true", help="list suite ids")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
