"""Command line entry points: index, query, export-dot, serve."""

from __future__ import annotations

import argparse
import difflib
import json
import logging
import os
import sys
import time
from pathlib import Path

from wandercode import graph as graphmod
from wandercode import service
from wandercode.engine import (
    CAP_COLLAPSED,
    CAP_EXPANDED,
    RecommendationSet,
    SessionState,
)
from wandercode.graph import ProjectIndex
from wandercode.ingest import Diagnostics, IngestConfig, ScanError, index_project
from wandercode.ranker import rank_candidates, top_k

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FATAL = 2
EXIT_UNKNOWN_ID = 3


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=os.environ.get("WANDERCODE_LOG", "WARNING").upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FATAL
    except graphmod.IndexBuildError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FATAL


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wandercode",
        description="Index a Java project's call graph and serve navigation recommendations.",
    )
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("index", help="index a project directory")
    p.add_argument("root")
    p.add_argument("-o", "--out", required=True, help="output index file (JSON)")
    p.add_argument("--config", help="IngestConfig JSON file")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("query", help="print recommendations for a method")
    p.add_argument("index")
    p.add_argument("method", help="method id (Class.method, optionally /arity)")
    p.add_argument("--expanded", action="store_true", help="use the expanded cap (5 per side)")
    p.add_argument("--list", action="store_true", help="print the merged control-style list")
    p.add_argument("--json", action="store_true", help="emit the service payload as JSON")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("export-dot", help="export a DOT neighborhood around a method")
    p.add_argument("index")
    p.add_argument("method")
    p.add_argument("--depth", type=int, default=1)
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("serve", help="run the recommendation service")
    p.add_argument("index")
    p.add_argument("--stdio", action="store_true", help="newline-delimited JSON on stdin/stdout")
    p.add_argument("--tcp", type=int, metavar="PORT", help="listen on localhost TCP")
    p.add_argument("--http", type=int, metavar="PORT", help="HTTP bridge for browser clients")
    p.add_argument("--root", default=".", help="project root for serving file contents")
    p.add_argument("--ui", help="static UI directory to serve over HTTP")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("report", help="print the candidate-size / ref-count report")
    p.add_argument("index")
    p.set_defaults(func=cmd_report)

    return parser


def cmd_index(args) -> int:
    config = IngestConfig.load(args.config) if args.config else IngestConfig()
    diagnostics = Diagnostics()
    started = time.monotonic()
    index, units = index_project(args.root, config, diagnostics)
    elapsed = time.monotonic() - started
    graphmod.save(index, args.out)
    sites = sum(e.site_count for e in index.edges)
    print(
        f"indexed {len(units)} file(s): {len(index.decls)} method(s), "
        f"{len(index.edges)} edge(s) ({sites} call site(s)) in {elapsed:.2f}s"
    )
    print(diagnostics.summary())
    for w in diagnostics.warnings:
        print(f"warning: {w}", file=sys.stderr)
    return EXIT_OK


def _load_index(path: str) -> ProjectIndex:
    return graphmod.load(path)


def _find_id(index: ProjectIndex, query: str) -> str | None:
    if query in index.decls:
        return query
    # Allow Class.method without the /arity suffix or path-stem qualifier.
    matches = [
        m for m in index.decls
        if m.split("@")[0].rsplit("/", 1)[0] == query or m.split("@")[0] == query
    ]
    if len(matches) == 1:
        return matches[0]
    if not matches:
        # Bare method name, if unique.
        by_method = [m for m, d in index.decls.items() if d.method_name == query]
        if len(by_method) == 1:
            return by_method[0]
    return None


def _unknown_id(index: ProjectIndex, query: str) -> int:
    near = difflib.get_close_matches(query, list(index.decls), n=5, cutoff=0.4)
    print(f"error: unknown method '{query}'", file=sys.stderr)
    if near:
        print("did you mean:", file=sys.stderr)
        for m in near:
            print(f"  {m}", file=sys.stderr)
    return EXIT_UNKNOWN_ID


def cmd_query(args) -> int:
    index = _load_index(args.index)
    focus = _find_id(index, args.method)
    if focus is None:
        return _unknown_id(index, args.method)

    cap = CAP_EXPANDED if args.expanded else CAP_COLLAPSED
    callers = top_k(rank_candidates(index, index.callers_of[focus]), cap)
    callees = top_k(rank_candidates(index, index.callees_of[focus]), cap)
    recs = RecommendationSet(
        focus=focus,
        callers=tuple(callers),
        callees=tuple(callees),
        expanded=args.expanded,
        pinned=False,
    )

    if args.json:
        session = service.Session(index=index)
        session.mode = "list" if args.list else "graph"
        session.state = SessionState(
            index_version=index.version, current=recs, expanded=args.expanded
        )
        print(json.dumps(service.recommendations_payload(session, True), sort_keys=True))
        return EXIT_OK

    d = index.decls[focus]
    print(f"focus: {focus} ({d.class_name}.{d.method_name}) {d.file}:{d.span_start}")
    if args.list:
        merged = service.merged_list(recs, index)
        if not merged:
            print("recommendations: (none)")
        for r in merged:
            print(f"  {r.rank}. {r.class_name}.{r.method_name} ({r.relevance})")
        return EXIT_OK
    print("callers:" + (" (none)" if not callers else ""))
    for r in callers:
        print(f"  {r.rank}. {r.class_name}.{r.method_name} ({r.relevance})")
    print("callees:" + (" (none)" if not callees else ""))
    for r in callees:
        print(f"  {r.rank}. {r.class_name}.{r.method_name} ({r.relevance})")
    return EXIT_OK


def cmd_export_dot(args) -> int:
    index = _load_index(args.index)
    focus = _find_id(index, args.method)
    if focus is None:
        return _unknown_id(index, args.method)
    sys.stdout.write(graphmod.neighborhood_dot(index, focus, max(0, args.depth)))
    return EXIT_OK


def cmd_report(args) -> int:
    index = _load_index(args.index)
    print(json.dumps(graphmod.degree_report(index), indent=2, sort_keys=True))
    return EXIT_OK


def cmd_serve(args) -> int:
    index = _load_index(args.index)
    root = Path(args.root)
    if args.tcp is not None:
        server = service.serve_tcp(index, args.tcp, root)
        print(f"listening on tcp://127.0.0.1:{server.server_address[1]}", file=sys.stderr)
        server.serve_forever()
        return EXIT_OK
    if args.http is not None:
        from wandercode.http_bridge import make_server

        ui_dir = Path(args.ui) if args.ui else None
        server = make_server(index, args.http, root, ui_dir)
        print(f"listening on http://127.0.0.1:{server.server_address[1]}", file=sys.stderr)
        server.serve_forever()
        return EXIT_OK
    service.serve_stdio(index, root)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
