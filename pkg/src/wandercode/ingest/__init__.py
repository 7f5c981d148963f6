"""Project ingestion: scan, parse, resolve, and build the call graph.

Parsing is pure per-file and runs across a thread pool; results are merged
in path order so the produced index is deterministic.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from wandercode.graph import ProjectIndex, build_index
from wandercode.ingest.config import IngestConfig
from wandercode.ingest.diagnostics import Diagnostics
from wandercode.model import MethodDecl, RawCallSite, SourceUnit
from wandercode.ingest.parser import parse_unit
from wandercode.ingest.resolve import resolve_calls
from wandercode.ingest.scan import ScanError, scan_project

__all__ = [
    "IngestConfig",
    "Diagnostics",
    "MethodDecl",
    "RawCallSite",
    "SourceUnit",
    "ScanError",
    "scan_project",
    "parse_unit",
    "resolve_calls",
    "index_project",
    "index_units",
]


def index_units(
    units: list[SourceUnit],
    config: IngestConfig | None = None,
    diagnostics: Diagnostics | None = None,
) -> ProjectIndex:
    """Parse already-loaded units and build the project index."""
    config = config or IngestConfig()
    diagnostics = diagnostics if diagnostics is not None else Diagnostics()

    with ThreadPoolExecutor() as pool:
        parsed = list(pool.map(parse_unit, units))  # map preserves unit order

    all_decls: list[MethodDecl] = []
    all_sites: list[RawCallSite] = []
    per_file: list[tuple[SourceUnit, list[MethodDecl], list[RawCallSite]]] = []
    for unit, (decls, sites) in zip(units, parsed):
        per_file.append((unit, decls, sites))

    # Disambiguate ids that occur in more than one file by suffixing the
    # path stem; within-file duplicates were already collapsed by the parser.
    id_files: dict[str, set[str]] = {}
    for unit, decls, _ in per_file:
        for d in decls:
            id_files.setdefault(d.id, set()).add(unit.path)
    colliding = {pid for pid, files in id_files.items() if len(files) > 1}

    for unit, decls, sites in per_file:
        rename = {
            d.id: f"{d.id}@{_path_stem(unit.path)}" for d in decls if d.id in colliding
        }
        for d in decls:
            if d.id in rename:
                d = MethodDecl(
                    id=rename[d.id],
                    class_name=d.class_name,
                    method_name=d.method_name,
                    arity=d.arity,
                    file=d.file,
                    span_start=d.span_start,
                    span_end=d.span_end,
                )
            all_decls.append(d)
        for s in sites:
            if s.caller in rename:
                s = RawCallSite(
                    caller=rename[s.caller],
                    callee_name=s.callee_name,
                    arg_count=s.arg_count,
                    site=s.site,
                )
            all_sites.append(s)

    file_refs = {u.path: u.referenced_names for u, _, _ in per_file}
    edges = resolve_calls(all_decls, all_sites, config, file_refs, diagnostics)
    return build_index(all_decls, edges)


def index_project(
    root: str | Path,
    config: IngestConfig | None = None,
    diagnostics: Diagnostics | None = None,
) -> tuple[ProjectIndex, list[SourceUnit]]:
    """Scan, parse, and index a project directory."""
    config = config or IngestConfig()
    diagnostics = diagnostics if diagnostics is not None else Diagnostics()
    units = scan_project(root, config, diagnostics)
    index = index_units(units, config, diagnostics)
    return index, units


def _path_stem(path: str) -> str:
    p = Path(path)
    return p.with_suffix("").as_posix().replace("/", ".")
