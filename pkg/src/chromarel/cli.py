"""Command line front end.

All machine-readable output is canonical JSON on stdout: sorted keys, no
whitespace, one trailing newline, so identical inputs give byte-identical
output. Timings and progress go to stderr only. Exit status 0 means success,
1 means a failed check or a non-extensible precoloring, 2 means bad usage
or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .checks import CHECKS, CorpusSpec, default_corpus, run_check
from .coloring import Precoloring, chromatic_number, k_colorable
from .families import generate
from .graphs import EditError, Graph
from .io import FORMATS, FormatError, format_for_path, parse_graph, serialize_graph
from .polynomial import BudgetError, chromatic_polynomial, evaluate
from .relations import (
    RouteDisagreementError,
    criticality,
    relation_report,
    scan_relations,
    to_dot,
)


class CliError(Exception):
    """Bad usage or bad input; exits with status 2."""


def _default_jobs() -> int:
    raw = os.environ.get("CHROMAREL_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _read_graph(path: str, fmt: str | None) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    use = fmt or format_for_path(path)
    try:
        return parse_graph(text, use)
    except FormatError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _write_out(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise CliError(f"cannot write {out}: {exc}") from exc


def _parse_precoloring(text: str, k: int) -> Precoloring:
    assignment: dict[int, int] = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        vertex, sep, color = piece.partition("=")
        if not sep:
            raise CliError(f"bad precoloring entry {piece!r}; expected VERTEX=COLOR")
        try:
            v, c = int(vertex), int(color)
        except ValueError as exc:
            raise CliError(f"bad precoloring entry {piece!r}: {exc}") from exc
        if v in assignment:
            raise CliError(f"vertex {v} precolored twice")
        assignment[v] = c
    if not assignment:
        raise CliError("empty precoloring")
    try:
        return Precoloring(assignment, k)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = _read_graph(args.file, args.format)
    k = chromatic_number(g)
    result: dict = {"n": g.n, "m": g.m, "chi": k}
    rels = None
    if args.relations or args.dot:
        rels = scan_relations(g)
    if args.relations:
        report = relation_report(g)
        result["relations"] = {
            "edges": report["edges"],
            "identities": report["identities"],
        }
    if args.criticality:
        crit = criticality(g)
        result["criticality"] = {
            "critical_vertices": list(crit.critical_vertices),
            "critical_edges": [list(e) for e in crit.critical_edges],
            "is_vertex_critical": crit.is_vertex_critical,
            "is_critical": crit.is_critical,
            "is_double_critical": crit.is_double_critical,
        }
    status = 0
    if args.pre is not None:
        target = args.extend if args.extend is not None else k
        pre = _parse_precoloring(args.pre, target)
        try:
            pre.validate_against(g)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        full = k_colorable(g, target, pre)
        result["extension"] = {
            "k": target,
            "extends": full is not None,
            "verdict": "extensible" if full is not None else "non-extensible",
            "coloring": full.to_json_dict() if full is not None else None,
        }
        if full is None:
            status = 1
    if args.dot:
        _write_out(to_dot(g, rels or ()), args.dot)
    _write_out(_canonical(result), args.output)
    return status


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.checks:
        ids = []
        for piece in args.checks.split(","):
            cid = piece.strip().upper()
            if not cid:
                continue
            if cid not in CHECKS:
                known = ", ".join(sorted(CHECKS))
                raise CliError(f"unknown check {cid!r}; known checks: {known}")
            ids.append(cid)
        if not ids:
            raise CliError("no checks named")
    else:
        ids = sorted(CHECKS)

    if args.exhaustive is None and args.families is None and args.random is None:
        corpus = default_corpus()
    else:
        families: tuple[str, ...] = ()
        if args.families:
            families = tuple(p.strip() for p in args.families.split(",") if p.strip())
        random_arg = None
        if args.random:
            try:
                n_str, p_str, count_str = args.random.split(",")
                random_arg = (int(n_str), float(p_str), args.seed, int(count_str))
            except ValueError as exc:
                raise CliError(f"bad --random value {args.random!r}; expected N,P,COUNT") from exc
        corpus = CorpusSpec(
            families=families,
            exhaustive_n=args.exhaustive,
            random=random_arg,
        )

    reports = []
    for cid in ids:
        try:
            report = run_check(cid, corpus, budget=args.budget, jobs=args.jobs)
        except (ValueError, EditError) as exc:
            raise CliError(str(exc)) from exc
        reports.append(report)
        print(
            f"{report.check_id}: {report.verdict} "
            f"({report.instances_run} instances over {report.corpus_size} graphs, "
            f"{report.elapsed:.2f}s)",
            file=sys.stderr,
        )
    all_pass = all(r.verdict == "pass" for r in reports)
    payload = {
        "checks": [r.to_json_dict(include_elapsed=False) for r in reports],
        "verdict": "pass" if all_pass else "fail",
    }
    _write_out(_canonical(payload), args.output)
    return 0 if all_pass else 1


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        g = generate(args.family, *args.params)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    fmt = args.format or (format_for_path(args.output) if args.output else "edgelist")
    try:
        text = serialize_graph(g, fmt)
    except FormatError as exc:
        raise CliError(str(exc)) from exc
    _write_out(text, args.output)
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    g = _read_graph(args.infile, args.from_format)
    fmt = args.to_format or format_for_path(args.outfile)
    try:
        text = serialize_graph(g, fmt)
    except FormatError as exc:
        raise CliError(str(exc)) from exc
    _write_out(text, args.outfile)
    return 0


def _cmd_poly(args: argparse.Namespace) -> int:
    g = _read_graph(args.file, args.format)
    try:
        poly = chromatic_polynomial(g, max_vertices=args.max_vertices)
    except BudgetError as exc:
        raise CliError(str(exc)) from exc
    evals: dict[str, int] = {}
    if args.eval:
        for piece in args.eval.split(","):
            piece = piece.strip()
            if not piece:
                continue
            try:
                point = int(piece)
            except ValueError as exc:
                raise CliError(f"bad evaluation point {piece!r}") from exc
            if point < 0:
                raise CliError("evaluation points must be nonnegative")
            evals[str(point)] = evaluate(poly, point)
    payload = {"coeffs": list(poly.coefficients), "eval": evals}
    _write_out(_canonical(payload), args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromarel",
        description="exact coloring analysis: chromatic numbers, polynomials, "
        "implicit edge/identity relations, and theorem checks",
    )
    parser.add_argument("--version", action="version", version=f"chromarel {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="chromatic number, relations, criticality, extensions")
    p.add_argument("file")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--relations", action="store_true", help="scan all vertex pairs")
    p.add_argument("--criticality", action="store_true")
    p.add_argument("--pre", metavar="V=C,V=C", help="precoloring, vertices 0-based, colors 1-based")
    p.add_argument("--extend", type=int, metavar="K", help="palette size for --pre (default chi)")
    p.add_argument("--dot", metavar="OUT", help="write a GraphViz view with relations overlaid")
    p.add_argument("-o", "--output", metavar="OUT")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="run theorem checks over a corpus")
    p.add_argument("--checks", metavar="LIST", help="comma-separated check ids")
    p.add_argument("--all", action="store_true", help="run the whole catalog (default)")
    p.add_argument("--exhaustive", type=int, metavar="N", help="all connected graphs of order <= N")
    p.add_argument("--families", metavar="LIST", help="comma-separated generate() tokens")
    p.add_argument("--random", metavar="N,P,COUNT", help="seeded random graphs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=float, default=600.0, metavar="SECONDS")
    p.add_argument(
        "--jobs",
        type=int,
        default=_default_jobs(),
        help="worker processes; CHROMAREL_JOBS sets the default",
    )
    p.add_argument("-o", "--output", metavar="OUT")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="write a named graph")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("-o", "--output", metavar="OUT")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("convert", help="translate between graph formats")
    p.add_argument("infile")
    p.add_argument("outfile")
    p.add_argument("--from", dest="from_format", choices=FORMATS)
    p.add_argument("--to", dest="to_format", choices=FORMATS)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("poly", help="chromatic polynomial coefficients and evaluations")
    p.add_argument("file")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--eval", metavar="K,K", help="evaluation points")
    p.add_argument("--max-vertices", type=int, default=20)
    p.add_argument("-o", "--output", metavar="OUT")
    p.set_defaults(func=_cmd_poly)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RouteDisagreementError as exc:
        # two supposedly equivalent decision procedures disagreed; surface it
        # like a failed check rather than a usage problem
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
