"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage, parse or IO
error, 3 internal invariant breach (e.g. the two ker algorithms disagree).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any

from .fixtures import EDGE_LISTS, fixture
from .generate import derive_seed, make, parse_model
from .graph import Graph, GraphError
from .io import read_graph, to_edge_list
from .mis import DEFAULT_ALPHA_GUARD, DEFAULT_NODE_BUDGET, DEFAULT_OMEGA_GUARD
from .critical import DEFAULT_ALPHA_C_GUARD
from .report import (
    DEFAULT_MATCHING_GUARD,
    SCHEMA_VERSION,
    InvariantBreach,
    analyze,
    render_text,
)
from .verify import CHECK_IDS, FAIL, PASS, SKIPPED, VerifyConfig, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

log = logging.getLogger("critset")


class UsageError(Exception):
    pass


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _load(source: str, fmt: str) -> Graph:
    """A file path, or ``fixture:NAME`` for a built-in graph."""
    if source.startswith("fixture:"):
        try:
            return fixture(source.split(":", 1)[1])
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    return read_graph(source, fmt)


def cmd_analyze(args: argparse.Namespace) -> int:
    G = _load(args.path, args.format)
    try:
        report = analyze(
            G,
            alpha_guard=args.exact_guard,
            omega_guard=args.omega_guard,
            node_budget=args.node_budget,
            matching_guard=args.matching_guard,
            alpha_c_guard=args.alpha_c_guard,
            mis=not args.no_mis,
            cross_check=args.cross_check,
            oracle=args.oracle,
        )
    except InvariantBreach as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(_dump(report.to_dict()) if args.json else render_text(report), end="\n" if args.json else "")
    return EXIT_OK


def _verify_sources(args: argparse.Namespace) -> list[tuple[str, Graph]]:
    graphs: list[tuple[str, Graph]] = []
    for source in args.sources:
        if source == "fixtures":
            graphs.extend((name, fixture(name)) for name in EDGE_LISTS)
        else:
            graphs.append((source, _load(source, args.format)))
    if args.random:
        try:
            model, n, p = parse_model(args.random)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        for i in range(args.count):
            s = derive_seed(args.seed, i)
            graphs.append((f"{args.random}#{i}", make(model, n, p, s)))
    if not graphs:
        raise UsageError("nothing to verify: give paths, 'fixtures', or --random")
    return graphs


def _verify_one(job: tuple[str, Graph, VerifyConfig]) -> dict[str, Any]:
    name, G, config = job
    return run_checks(G, config, name=name).to_dict()


def cmd_verify(args: argparse.Namespace) -> int:
    checks = CHECK_IDS
    if args.checks:
        checks = tuple(c.strip().upper() for c in args.checks.split(",") if c.strip())
    if args.count < 0:
        raise UsageError("--count must be non-negative")
    try:
        config = VerifyConfig(checks=checks, oracle_limit=args.oracle_limit, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.oracle_limit > 20:
        raise UsageError("--oracle-limit is capped at 20")
    if args.oracle_limit > 16:
        log.warning("oracle limit raised above the default 16; runs may be slow")
    jobs = [(name, G, config) for name, G in _verify_sources(args)]

    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_one, jobs, chunksize=4))  # ordered by index
    else:
        reports = [_verify_one(job) for job in jobs]

    tally: dict[str, Counter] = {cid: Counter() for cid in checks}
    failed = internal = 0
    for rep in reports:
        for c in rep["checks"]:
            tally[c["id"]][c["outcome"]] += 1
            failed += c["outcome"] == FAIL
            internal += (c["reason"] or "").startswith("internal error")
    summary = {
        cid: {k: tally[cid][k] for k in (PASS, FAIL, SKIPPED)} for cid in checks if cid in tally
    }

    if args.json:
        print(_dump({"schema": SCHEMA_VERSION, "graphs": reports, "summary": summary}))
    else:
        for rep in reports:
            g = rep["graph"]
            bad = [c for c in rep["checks"] if c["outcome"] == FAIL]
            status = "FAIL" if bad else "ok"
            print(f"{g['name']}: n={g['n']} m={g['m']} {status}")
            for c in bad:
                print(f"  {c['id']} fail: {json.dumps(c['witness'], ensure_ascii=False)}")
            for c in rep["checks"]:
                if (c["reason"] or "").startswith("internal error"):
                    print(f"  {c['id']} {c['reason']}")
        print(f"{len(reports)} graph(s)")
        for cid, counts in summary.items():
            print(f"{cid:>4}: {counts[PASS]} pass, {counts[FAIL]} fail, {counts[SKIPPED]} skipped")
    if internal:
        return EXIT_INTERNAL
    return EXIT_FAIL if failed else EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.model == "gnp" and (args.p is None or not 0.0 <= args.p <= 1.0):
        raise UsageError("gnp needs --p in [0, 1]")
    G = make(args.model, args.n, args.p or 0.0, args.seed)
    text = to_edge_list(G)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return EXIT_OK


def cmd_fixtures(args: argparse.Namespace) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, text in EDGE_LISTS.items():
        (out / f"{name}.txt").write_text(text)
    print(f"wrote {len(EDGE_LISTS)} fixtures to {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critset",
        description="Critical sets, ker, core and matching invariants of simple graphs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    formats = ("edge-list", "dimacs")

    p = sub.add_parser("analyze", help="report every invariant of one graph")
    p.add_argument("path", help="graph file, or fixture:NAME for a built-in graph")
    p.add_argument("--format", choices=formats, default="edge-list")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--exact-guard", type=int, default=DEFAULT_ALPHA_GUARD, metavar="N",
                   help="largest n for exact alpha (default %(default)s)")
    p.add_argument("--omega-guard", type=int, default=DEFAULT_OMEGA_GUARD, metavar="N",
                   help="largest n for enumerating maximum independent sets (default %(default)s)")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET, metavar="K",
                   help="search-tree node budget for the exact routines")
    p.add_argument("--matching-guard", type=int, default=DEFAULT_MATCHING_GUARD, metavar="N",
                   help="largest n for the general maximum matching mu(G) (default %(default)s)")
    p.add_argument("--alpha-c-guard", type=int, default=DEFAULT_ALPHA_C_GUARD, metavar="N",
                   help="largest n for a maximum critical independent set (default %(default)s)")
    p.add_argument("--no-mis", action="store_true",
                   help="skip alpha, core and corona; polynomial work only")
    p.add_argument("--oracle", action="store_true",
                   help="compare against brute force when n is small enough")
    p.add_argument("--cross-check", action="store_true",
                   help="recompute ker one vertex at a time and compare")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run checks C1..C17 over graphs")
    p.add_argument("sources", nargs="*", help="graph files, fixture:NAME, or 'fixtures' for all built-ins")
    p.add_argument("--format", choices=formats, default="edge-list")
    p.add_argument("--random", metavar="SPEC", help="gnp:N,P or tree:N")
    p.add_argument("--count", type=int, default=1, help="graphs to draw with --random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks", metavar="IDS", help="comma-separated subset, e.g. C10,C11")
    p.add_argument("--oracle-limit", type=int, default=16, metavar="N",
                   help="largest n for brute-force oracles (default %(default)s, max 20)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a seeded random graph as an edge list")
    p.add_argument("--model", choices=("gnp", "tree"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fixtures", help="write the built-in graphs as edge lists")
    p.add_argument("--out", required=True, help="target directory")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
