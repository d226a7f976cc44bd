"""Command-line front end: ``count``, ``series``, ``verify`` and ``export``.

Exit codes are 0 on success, 1 when a verification fails and 2 for usage
errors, resource caps and I/O failures.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import List, Optional, TextIO

from . import closedform as cf
from . import verify as V
from .export import to_csv, to_dot, write_intervals_jsonl
from .paths import ResourceLimitError
from .posets import STATISTICS, build_poset

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SERIES_EQUATIONS = ("greedy", "greedy-q", "greedy-system", "ordinary", "ordinary-system",
                    "contacts", "constellation")
# largest n compared against enumeration by ``series --verify enumeration``
FEASIBLE_N = {1: 6, 2: 5, 3: 4}


def _emit(text: str, out: TextIO) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def cmd_count(args, out: TextIO) -> int:
    graph = build_poset(args.m, args.n, args.flavor)
    brute = graph.interval_count()
    formula = (cf.greedy_count if args.flavor == "greedy" else cf.ordinary_count)(args.m, args.n)
    ok = brute == formula
    if args.output == "json":
        _emit(json.dumps({"m": args.m, "n": args.n, "flavor": args.flavor, "brute": brute,
                          "formula": formula, "pass": ok}), out)
    else:
        _emit(f"brute: {brute}\nformula: {formula}\n{'PASS' if ok else 'FAIL'}", out)
    return EXIT_OK if ok else EXIT_FAIL


def _series_labels(equation: str, m: int) -> List[str]:
    if equation == "greedy-system":
        return [f"J_{i}" for i in range(m + 2)]
    if equation == "ordinary-system":
        return [f"Jbar_{i}" for i in range(m + 2)]
    return [{"greedy": "I", "greedy-q": "I", "ordinary": "Ibar", "contacts": "T",
             "constellation": "C"}[equation]]


def cmd_series(args, out: TextIO) -> int:
    series = V.solver_series(args.equation, args.m, args.order)
    labels = _series_labels(args.equation, args.m)
    status = EXIT_OK
    report = None
    if args.verify == "enumeration":
        n_max = args.nmax or min(args.order - 1, FEASIBLE_N.get(args.m, 3))
        report = V.verify_series(args.equation, args.m, n_max)
        status = EXIT_OK if report.passed else EXIT_FAIL
    if args.output == "json":
        body = {"equation": args.equation, "m": args.m, "order": args.order,
                "series": {lab: s.to_json() for lab, s in zip(labels, series)}}
        if report is not None:
            body["verification"] = {"pass": report.passed, **report.to_json()}
        _emit(json.dumps(body), out)
    else:
        if len(series) == 1:
            _emit(series[0].to_text(" ; "), out)
        else:
            for lab, s in zip(labels, series):
                _emit(f"{lab}: {s.to_text(' ; ')}", out)
        if report is not None:
            for c in report.failures():
                _emit(f"mismatch at {c.key}", out)
            _emit("PASS" if report.passed else "FAIL", out)
    return status


def _run_verify(target: str, args) -> dict:
    reports = V.run_target(target, m=args.m, n=args.n, n_max=args.nmax, threads=args.threads)
    return {"target": target, "pass": all(r.passed for r in reports),
            "reports": [r.to_json() for r in reports]}


def cmd_verify(args, out: TextIO) -> int:
    targets = V.TARGETS if args.target == "all" else (args.target,)
    results = [_run_verify(t, args) for t in targets]
    ok = all(r["pass"] for r in results)
    if args.output == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["target", "m", "n", "key", "lhs", "rhs", "pass"])
        for res in results:
            for rep in res["reports"]:
                for c in rep["checks"]:
                    if "identity" in c:
                        w.writerow([res["target"], c["params"][0], "",
                                    f"{c['identity']} {tuple(c['params'])}", "", "",
                                    str(c["pass"]).lower()])
                    else:
                        w.writerow([res["target"], rep["m"], c["n"], c["key"], c["lhs"],
                                    c["rhs"], str(c["pass"]).lower()])
    else:
        body = results[0] if len(results) == 1 else {"pass": ok, "targets": results}
        _emit(json.dumps(body, indent=1), out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_export(args, out: TextIO) -> int:
    graph = build_poset(args.m, args.n, args.flavor)
    if args.format == "dot":
        _emit(to_dot(graph), out)
    elif args.format == "json":
        write_intervals_jsonl(graph, out, with_chain=args.chain)
    else:
        stats = args.statistic or [s for s in STATISTICS if s != "chain-q"]
        _emit(to_csv(graph, stats), out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    def common(default):
        # accepted before or after the subcommand; the subparser copy never
        # overrides a value given at top level
        parent = argparse.ArgumentParser(add_help=False)
        parent.add_argument("--threads", type=int, default=default(os.cpu_count() or 1),
                            help="worker processes for parallel checks (output is unaffected)")
        parent.add_argument("--out", metavar="FILE", default=default(None),
                            help="write to FILE instead of stdout")
        return parent

    p = argparse.ArgumentParser(prog="greedy-tamari", parents=[common(lambda v: v)],
                                description="Exact enumeration of greedy and ordinary m-Tamari intervals.")
    shared = common(lambda v: argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[shared], help="brute-force interval count against the closed formula")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--flavor", choices=("greedy", "ordinary"), default="greedy")
    c.add_argument("--output", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_count)

    s = sub.add_parser("series", parents=[shared], help="solve a functional equation as a truncated series")
    s.add_argument("--equation", choices=SERIES_EQUATIONS, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--order", type=int, default=6, help="truncation order N (terms t^0..t^{N-1})")
    s.add_argument("--verify", choices=("enumeration",))
    s.add_argument("--nmax", type=int, help="largest size compared against enumeration")
    s.add_argument("--output", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_series)

    v = sub.add_parser("verify", parents=[shared], help="run a verification suite and emit its JSON report")
    v.add_argument("--target", choices=V.TARGETS + ("all",), required=True)
    v.add_argument("--m", type=int)
    v.add_argument("--n", type=int, help="a single size (count-type targets)")
    v.add_argument("--nmax", type=int, help="largest size, or truncation order for parametric targets")
    v.add_argument("--output", choices=("json", "csv"), default="json")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", parents=[shared], help="Hasse diagram, interval stream or histograms")
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--flavor", choices=("greedy", "ordinary"), default="greedy")
    e.add_argument("--format", choices=("dot", "json", "csv"), required=True)
    e.add_argument("--statistic", action="append", choices=STATISTICS,
                   help="histogram statistic for csv (repeatable)")
    e.add_argument("--chain", action="store_true", help="include longest-chain lengths in json")
    e.set_defaults(func=cmd_export)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("m", "n", "order", "nmax"):
        value = getattr(args, name, None)
        if value is not None and value < 1:
            parser.error(f"--{name} must be positive")
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                return args.func(args, fh)
        return args.func(args, sys.stdout)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
