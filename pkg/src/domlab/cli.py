"""Command-line interface.

Subcommands (all emit JSON lines on stdout unless --out is given):

  gamma      domination number and witness per input graph
  classify   per-edge criticality flags and condition reports
  msd        per-edge subdivision profiles and multisubdivision numbers
  sclass     subdivision class (1..3) per graph
  verify     run verification suites over a corpus
  scan       exploratory counterexample scans

Exit codes: 0 success (verify: all suites pass or skip), 1 verify found
violations, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bitset import members
from .corpus import BUNDLED, resolve_corpus
from .criticality import classify_edge
from .errors import DomlabError, ScopeError
from .formats import to_graph6
from .multisubdivision import DEFAULT_CAP, MsdMarker, msd_graph, profile, s_class
from .properties import parse_property
from .solver import gamma
from .verifier import (
    ASSERTIONS,
    SUITES,
    VerifyOptions,
    all_reports_pass,
    emit_report,
    run_suites,
    scan_counterexamples,
)


def _jsonable(x):
    if isinstance(x, MsdMarker):
        return x.value
    return x


def _input_graphs(spec: str, skip_bad: bool) -> list:
    return resolve_corpus(spec, skip_bad=skip_bad)


def _emit(line: dict, out) -> None:
    out.write(json.dumps(line) + "\n")


def _cmd_gamma(args, out) -> int:
    p = parse_property(args.property)
    for g in _input_graphs(args.input, args.skip_bad):
        result = gamma(g, p)
        _emit({
            "graph": to_graph6(g),
            "property": p.key,
            "gamma": result.value,
            "witness": members(result.witness) if result.witness is not None else None,
        }, out)
    return 0


def _cmd_classify(args, out) -> int:
    p = parse_property(args.property)
    for g in _input_graphs(args.input, args.skip_bad):
        g6 = to_graph6(g)
        for e in g.edges():
            c = classify_edge(g, e, p, literal=args.literal_iii)
            _emit({
                "graph": g6,
                "property": p.key,
                "edge": list(c.edge),
                "gammas": {
                    "base": c.gamma,
                    "subdivided": c.gamma_subdivided,
                    "deleted": c.gamma_deleted,
                },
                "flags": {
                    "s_plus": c.s_plus,
                    "s_minus": c.s_minus,
                    "er_minus": c.er_minus,
                    "in_scope": c.in_scope,
                },
                "conditions": [
                    {"set": members(M), "i": cond.i, "ii": cond.ii, "iii": cond.iii}
                    for M, cond in c.condition_report
                ],
            }, out)
    return 0


def _cmd_msd(args, out) -> int:
    p = parse_property(args.property)
    for g in _input_graphs(args.input, args.skip_bad):
        g6 = to_graph6(g)
        for e in g.edges():
            pr = profile(g, e, p, cap=args.cap)
            _emit({
                "graph": g6,
                "property": p.key,
                "edge": list(pr.edge),
                "values": list(pr.values),
                "msd": _jsonable(pr.msd),
                "msd_plus": _jsonable(pr.msd_plus),
                "msd_minus": _jsonable(pr.msd_minus),
                "cap": pr.cap,
            }, out)
        if g.edges():
            graph_level = msd_graph(g, p, cap=args.cap)
            _emit({
                "graph": g6,
                "property": p.key,
                "edge": None,
                "msd": _jsonable(graph_level.msd),
                "msd_plus": _jsonable(graph_level.msd_plus),
                "msd_minus": _jsonable(graph_level.msd_minus),
                "cap": args.cap,
            }, out)
    return 0


def _cmd_sclass(args, out) -> int:
    p = parse_property(args.property)
    for g in _input_graphs(args.input, args.skip_bad):
        _emit({
            "graph": to_graph6(g),
            "property": p.key,
            "class": s_class(g, p).class_index,
        }, out)
    return 0


def _cmd_verify(args, out) -> int:
    properties = [parse_property(t) for t in args.properties.split(",") if t]
    if args.suites == "all":
        suite_ids = list(SUITES)
    else:
        suite_ids = [s for s in args.suites.split(",") if s]
        for s in suite_ids:
            if s not in SUITES:
                raise DomlabError(f"unknown suite {s!r}; known: {', '.join(SUITES)}")
    corpus = resolve_corpus(args.corpus, skip_bad=args.skip_bad)
    options = VerifyOptions(fail_fast=args.fail_fast,
                            literal_iii=args.literal_iii, jobs=args.jobs)
    reports = run_suites(suite_ids, properties, corpus, options)
    for report in reports:
        emit_report(report, out)
    return 0 if all_reports_pass(reports) else 1


def _cmd_scan(args, out) -> int:
    p = parse_property(args.property)
    corpus = resolve_corpus(args.corpus, skip_bad=args.skip_bad)
    for hit in scan_counterexamples(args.assertion, p, corpus):
        _emit(hit, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domlab",
        description="Exact domination numbers under graph-property constraints, "
                    "edge criticality, subdivision profiles, and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, with_property=True):
        if with_property:
            sp.add_argument("--property", required=True,
                            help="I, O, C, T, F, UK, or D:<k>")
        sp.add_argument("--input", required=True,
                        help="g6:<file>, edges:<file>, bundled:<name>; file '-' reads stdin")
        sp.add_argument("--skip-bad", action="store_true",
                        help="skip unparsable corpus lines with a warning")
        sp.add_argument("--out", default=None, help="write JSON lines here instead of stdout")

    sp = sub.add_parser("gamma", help="domination number per graph")
    add_common(sp)
    sp.set_defaults(func=_cmd_gamma)

    sp = sub.add_parser("classify", help="criticality flags per edge")
    add_common(sp)
    sp.add_argument("--literal-iii", action="store_true",
                    help="use the non-symmetrized reading of condition (iii)")
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("msd", help="subdivision profiles per edge")
    add_common(sp)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP,
                    help=f"profile depth (default {DEFAULT_CAP})")
    sp.set_defaults(func=_cmd_msd)

    sp = sub.add_parser("sclass", help="subdivision class per graph")
    add_common(sp)
    sp.set_defaults(func=_cmd_sclass)

    sp = sub.add_parser("verify", help="run verification suites over a corpus")
    sp.add_argument("--suites", default="all",
                    help="comma list of suite ids, or 'all' (default)")
    sp.add_argument("--properties", required=True,
                    help="comma list, e.g. I,O,F,UK,D:1")
    sp.add_argument("--corpus", required=True,
                    help=f"bundled:<name> ({', '.join(BUNDLED)}), g6:<file>, edges:<file>")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    sp.add_argument("--out", default=None, help="write the report here")
    sp.add_argument("--fail-fast", action="store_true",
                    help="stop each suite at its first violation")
    sp.add_argument("--literal-iii", action="store_true",
                    help="informational run with the non-symmetrized condition (iii)")
    sp.add_argument("--skip-bad", action="store_true")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("scan", help="exploratory counterexample scan")
    sp.add_argument("--assertion", required=True,
                    help=f"one of: {', '.join(sorted(ASSERTIONS))}")
    sp.add_argument("--property", required=True)
    sp.add_argument("--corpus", required=True)
    sp.add_argument("--skip-bad", action="store_true")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=_cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    opened = None
    try:
        if getattr(args, "out", None):
            opened = open(args.out, "w")
            out = opened
        return args.func(args, out)
    except (DomlabError, ScopeError, ValueError, OSError) as exc:
        print(f"domlab: error: {exc}", file=sys.stderr)
        return 2
    finally:
        if opened is not None:
            opened.close()


if __name__ == "__main__":
    sys.exit(main())
