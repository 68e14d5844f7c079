"""Batch command line for enumeration, verification, and bijections.

Subcommands: enumerate, count, check, bijection, series, verify-all,
render.  Output is JSON lines by default (--format text for plain text),
written deterministically so runs can be diffed.  Exit codes: 0 success,
1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bijections import (matching_to_schroeder, matching_to_tableau,
                         path_to_walk, schroeder_to_matching,
                         tableau_to_matching, tableau_to_walk, walk_to_path,
                         walk_to_tableau)
from .formulas import (catalan_k, crossing_refined_12312,
                       crossing_refined_double, double_avoider_count)
from .gentree import TREE_PATTERNS, validate_succession_rule
from .matchings import Matching, Pattern, avoiders, enumerate_matchings
from .paths import LatticeWalk, SchroederPath
from .render import render_arc_diagram
from .tableaux import OscillatingTableau
from .verify import run_all


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True)


def _parse_patterns(texts: Sequence[str]) -> tuple[Pattern, ...]:
    return tuple(Pattern.from_text(t) for t in texts)


def _cmd_enumerate(args) -> int:
    patterns = _parse_patterns(args.pattern)
    stream = (avoiders(args.n, patterns) if patterns
              else enumerate_matchings(args.n))
    for m in stream:
        if args.format == "json":
            print(_dump({"word": m.word_text()}))
        else:
            print(m.word_text() if m.n else "(empty)")
    return 0


def _cmd_count(args) -> int:
    patterns = _parse_patterns(args.pattern)
    stream = avoiders(args.n, patterns) if patterns else enumerate_matchings(args.n)
    if args.m is None:
        count = sum(1 for _ in stream)
    else:
        count = sum(1 for m in stream if m.crossing_count() == args.m)
    payload: dict = {"n": args.n, "count": str(count)}
    if len(patterns) == 1:
        payload["pattern"] = str(patterns[0])
    elif patterns:
        payload["patterns"] = [str(p) for p in patterns]
    if args.m is not None:
        payload["m"] = args.m
    if args.format == "json":
        print(_dump(payload))
    else:
        print(count)
    return 0


def _cmd_check(args) -> int:
    patterns = _parse_patterns(args.pattern) if args.pattern else TREE_PATTERNS
    max_n = args.max_n if args.max_n is not None else 4
    ok = True
    for pattern in patterns:
        report = validate_succession_rule(pattern, max_n)
        ok = ok and report.passed
        if args.format == "json":
            print(report.to_json())
        else:
            state = "ok" if report.passed else "FAIL"
            print(f"pattern {report.pattern}: {state} "
                  f"levels {report.level_sizes}")
            for line in report.rule_violations + report.coverage_violations:
                print(f"  {line}")
    return 0 if ok else 1


def _run_map(name: str, text: str) -> tuple[str, bool]:
    if name == "phi":
        path = SchroederPath(text)
        m = schroeder_to_matching(path)
        return m.word_text(), matching_to_schroeder(m) == path
    if name == "rho":
        osc = OscillatingTableau.from_text(text)
        m = tableau_to_matching(osc)
        return m.word_text(), matching_to_tableau(m) == osc
    if name == "walk":
        osc = OscillatingTableau.from_text(text)
        walk = tableau_to_walk(osc)
        return walk.steps, walk_to_tableau(walk) == osc
    if name == "tau":
        walk = LatticeWalk(text)
        path = walk_to_path(walk)
        return path.steps, path_to_walk(path) == walk
    raise AssertionError(f"unknown map {name}")


def _cmd_bijection(args) -> int:
    output, roundtrip = _run_map(args.map, args.input)
    if args.format == "json":
        print(_dump({"output": output, "roundtrip": roundtrip}))
    else:
        print(output)
    return 0 if roundtrip else 1


def _series_rows(max_n: int):
    for n in range(max_n + 1):
        yield {"series": "three_catalan", "n": n,
               "value": str(catalan_k(n, 3))}
        for m in range(max(n, 1)):
            yield {"series": "crossing", "n": n, "m": m,
                   "value": str(crossing_refined_12312(n, m))}
        yield {"series": "double_avoider", "n": n,
               "value": str(double_avoider_count(n))}
        for m in range(max(n, 1)):
            yield {"series": "double_crossing", "n": n, "m": m,
                   "value": str(crossing_refined_double(n, m))}


def _cmd_series(args) -> int:
    max_n = args.max_n if args.max_n is not None else 8
    for row in _series_rows(max_n):
        if args.n is not None and row["n"] != args.n:
            continue
        if args.m is not None and row.get("m") != args.m:
            continue
        if args.format == "json":
            print(_dump(row))
        else:
            m_part = f" m={row['m']}" if "m" in row else ""
            print(f"{row['series']} n={row['n']}{m_part}: {row['value']}")
    return 0


def _cmd_verify_all(args) -> int:
    results = run_all(args.max_n)
    for r in results:
        if args.format == "json":
            print(r.to_json())
        else:
            state = "pass" if r.passed else "FAIL"
            print(f"criterion {r.criterion} {r.name}: {state} ({r.details})")
    return 0 if all(r.passed for r in results) else 1


def _cmd_render(args) -> int:
    m = Matching.from_word(args.input)
    diagram = render_arc_diagram(m)
    if args.format == "json":
        print(_dump({"word": m.word_text(), "diagram": diagram}))
    else:
        print(diagram)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcmatch",
        description="pattern-avoiding perfect matchings: enumeration, "
                    "exact counting, bijections, and verification")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "text"), default="json")
        return p

    p = add("enumerate", "list matchings, optionally filtered by patterns")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", action="append", default=[])
    p.set_defaults(func=_cmd_enumerate)

    p = add("count", "count matchings avoiding the given patterns")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", action="append", default=[])
    p.add_argument("--m", type=int, default=None,
                   help="restrict to exactly this many crossings")
    p.set_defaults(func=_cmd_count)

    p = add("check", "validate the succession rule for tree patterns")
    p.add_argument("--pattern", action="append", default=[])
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.set_defaults(func=_cmd_check)

    p = add("bijection", "apply one of the bijections and round-trip it")
    p.add_argument("--map", choices=("phi", "rho", "tau", "walk"),
                   required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_bijection)

    p = add("series", "exact counting sequences as JSON rows")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.set_defaults(func=_cmd_series)

    p = add("verify-all", "run every verification suite")
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.set_defaults(func=_cmd_verify_all)

    p = add("render", "draw a matching as an ASCII arc diagram")
    p.add_argument("--input", required=True, help="matching word")
    p.set_defaults(func=_cmd_render)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
