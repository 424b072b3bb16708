"""Command line entry point.

Exit codes: 0 success, 1 parse error, 2 non-generating transposition set,
3 capacity exceeded, 4 line-graph automorphism not liftable, 5 a checked
claim failed (lemma violation, sweep mismatch, broken lift correspondence).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import analysis, cayley
from .errors import CapacityError, NotLiftable, ParseError, PreconditionError
from .graphcore import to_dot
from .symmetry import Method
from .transgraph import graph_of

EXIT_PARSE, EXIT_NOT_GENERATING, EXIT_CAPACITY, EXIT_NOT_LIFTABLE, EXIT_CLAIM = 1, 2, 3, 4, 5


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _table(rows: list[list], header: list[str]) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _human_report(report: dict) -> str:
    keys = [
        "n", "classification", "aut_g_order", "cayley_vertices", "cayley_edges",
        "stab_order", "aut_order", "expected_normal_order", "is_normal", "criterion_used",
    ]
    rows = [[k, report[k]] for k in keys]
    rows.append(["edges", " ".join(f"{a}-{b}" for a, b in report["edges"])])
    for name, res in (report.get("lemma_results") or {}).items():
        rows.append([f"lemma {name}", "pass" if res["passed"] else f"FAIL ({res['violation_count']})"])
    return _table(rows, ["field", "value"])


def _human_sweep(summary: dict) -> str:
    header = ["canonical_form", "kind", "|Aut G|", "stab", "|Aut Γ|", "n!|Aut G|", "normal", "direct"]
    rows = [
        [r["canonical_form"], r["classification"], r["aut_g_order"], r["stab_order"], r["aut_order"],
         r["expected_normal_order"], r["is_normal"], r["direct_product"]]
        for r in summary["classes"]
    ]
    foot = (
        f"\n{summary['classes_normal']}/{summary['classes_total']} normal; "
        f"exceptions: {', '.join(e['reason'] for e in summary['exceptions']) or 'none'}; "
        f"characterization holds: {summary['characterization_holds']}"
    )
    return _table(rows, header) + foot


def _read_set(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return analysis.parse_edge_list(text)


def cmd_analyze(args) -> int:
    t = _read_set(args.file)
    report = analysis.analyze(t, method=args.method, skip_lemmas=args.skip_lemmas,
                              sigma_count=args.sigma_count, seed=args.seed).as_dict()
    if args.dot:
        dot = Path(args.dot)
        dot.write_text(to_dot(graph_of(t), "G"))
        if t.n <= 4:
            dot.with_suffix(".cayley.dot").write_text(cayley.build(t).to_dot())
    if args.plot:
        from .plotting import plot_analysis

        plot_analysis(report, args.plot)
    print(_human_report(report) if args.human else dump_json(report))
    return 0


def cmd_sweep(args) -> int:
    summary = analysis.sweep(args.n, jobs=args.jobs).as_dict()
    if args.plot:
        from .plotting import plot_sweep

        plot_sweep(summary, args.plot)
    print(_human_sweep(summary) if args.human else dump_json(summary))
    return 0 if summary["characterization_holds"] else EXIT_CLAIM


def cmd_lemmas(args) -> int:
    report = analysis.lemma_report(_read_set(args.file), sigma_count=args.sigma_count, seed=args.seed)
    print(dump_json(report))
    return 0 if report["all_passed"] else EXIT_CLAIM


def cmd_lift(args) -> int:
    t = _read_set(args.file)
    try:
        listing = analysis.lift_listing(t)
    except PreconditionError as exc:
        if not graph_of(t).is_connected():
            raise
        raise NotLiftable(str(exc)) from exc
    print(dump_json(listing))
    return 0 if listing["bijective"] else EXIT_CLAIM


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleynorm",
        description="Automorphism groups and normality of Cayley graphs of S_n generated by transpositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one transposition set")
    p.add_argument("file", help="edge-list file: n on the first line, then 'i j' per edge")
    p.add_argument("--method", choices=[m.value for m in Method], default=None,
                   help="normality criterion (default: both when n >= 5, else conjugation)")
    p.add_argument("--skip-lemmas", action="store_true", help="omit the local-structure checks")
    p.add_argument("--sigma-count", type=int, default=5, help="random base points for lemma checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dot", metavar="PATH", help="write G(T) as DOT (and the Cayley graph when n <= 4)")
    p.add_argument("--plot", metavar="PATH", help="write a figure of G(T) and the group orders")
    p.add_argument("--human", action="store_true", help="aligned table instead of JSON")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="check every connected transposition graph on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--jobs", type=int, default=int(os.environ.get("CAYLEY_JOBS", "1")))
    p.add_argument("--plot", metavar="PATH", help="write a bar chart of group orders per class")
    p.add_argument("--human", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("lemmas", help="run the local-structure checks")
    p.add_argument("file")
    p.add_argument("--sigma-count", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("lift", help="match Aut(L(G)) with Aut(G)")
    p.add_argument("file")
    p.set_defaults(func=cmd_lift)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotLiftable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_LIFTABLE
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_GENERATING


if __name__ == "__main__":
    sys.exit(main())
