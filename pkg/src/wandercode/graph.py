"""Immutable project call graph: adjacency, reference counts, persistence."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from statistics import quantiles

from wandercode.model import MethodDecl


class IndexBuildError(Exception):
    """An edge references a declaration missing from the index."""


class UnknownMethodError(KeyError):
    """Query for an id that is not in the index."""


@dataclass(frozen=True)
class CallEdge:
    caller: str
    callee: str
    site_count: int
    sites: tuple[int, ...]


@dataclass(frozen=True)
class ProjectIndex:
    decls: dict[str, MethodDecl]
    edges: tuple[CallEdge, ...]
    callers_of: dict[str, frozenset[str]]
    callees_of: dict[str, frozenset[str]]
    ref_count: dict[str, int]
    version: str


def build_index(decls: list[MethodDecl], edges: list[CallEdge]) -> ProjectIndex:
    """Assemble the immutable index; rejects edges with dangling endpoints."""
    decl_map = {d.id: d for d in decls}
    for e in edges:
        if e.caller not in decl_map or e.callee not in decl_map:
            raise IndexBuildError(f"edge references unknown method: {e.caller} -> {e.callee}")

    callers: dict[str, set[str]] = {d.id: set() for d in decls}
    callees: dict[str, set[str]] = {d.id: set() for d in decls}
    ref_count = {d.id: 0 for d in decls}
    for e in edges:
        callers[e.callee].add(e.caller)
        callees[e.caller].add(e.callee)
        ref_count[e.callee] += e.site_count

    return ProjectIndex(
        decls=decl_map,
        edges=tuple(sorted(edges, key=lambda e: (e.caller, e.callee))),
        callers_of={m: frozenset(s) for m, s in callers.items()},
        callees_of={m: frozenset(s) for m, s in callees.items()},
        ref_count=ref_count,
        version=_version_hash(decls, edges),
    )


def callers(index: ProjectIndex, m: str) -> frozenset[str]:
    if m not in index.decls:
        raise UnknownMethodError(m)
    return index.callers_of[m]


def callees(index: ProjectIndex, m: str) -> frozenset[str]:
    if m not in index.decls:
        raise UnknownMethodError(m)
    return index.callees_of[m]


def degree_report(index: ProjectIndex) -> dict:
    """Per-method candidate-set sizes and the ref_count spectrum.

    Informational: captures how many callers+callees each method has and
    summary percentiles of both distributions.
    """
    sizes = {
        m: len(index.callers_of[m]) + len(index.callees_of[m]) for m in index.decls
    }
    histogram: dict[int, int] = {}
    for size in sizes.values():
        histogram[size] = histogram.get(size, 0) + 1
    return {
        "methods": len(index.decls),
        "candidate_sizes": dict(sorted(sizes.items())),
        "size_histogram": dict(sorted(histogram.items())),
        "size_percentiles": _percentiles(list(sizes.values())),
        "ref_count_percentiles": _percentiles(list(index.ref_count.values())),
    }


def _percentiles(values: list[int]) -> dict[str, float]:
    if not values:
        return {}
    if len(values) == 1:
        v = float(values[0])
        return {"p50": v, "p90": v, "p99": v, "max": v}
    qs = quantiles(values, n=100, method="inclusive")
    return {"p50": qs[49], "p90": qs[89], "p99": qs[98], "max": float(max(values))}


# -- persistence -------------------------------------------------------------

def to_json_dict(index: ProjectIndex) -> dict:
    return {
        "version": index.version,
        "decls": [
            {
                "id": d.id,
                "className": d.class_name,
                "methodName": d.method_name,
                "arity": d.arity,
                "file": d.file,
                "spanStart": d.span_start,
                "spanEnd": d.span_end,
            }
            for d in sorted(index.decls.values(), key=lambda d: d.id)
        ],
        "edges": [
            {
                "caller": e.caller,
                "callee": e.callee,
                "siteCount": e.site_count,
                "sites": list(e.sites),
            }
            for e in index.edges
        ],
    }


def serialize(index: ProjectIndex) -> bytes:
    """Canonical byte form; identical inputs always serialize identically."""
    return json.dumps(
        to_json_dict(index), sort_keys=True, separators=(",", ":")
    ).encode("utf-8") + b"\n"


def save(index: ProjectIndex, path: str | Path) -> None:
    Path(path).write_bytes(serialize(index))


def load(path: str | Path) -> ProjectIndex:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        decls = [
            MethodDecl(
                id=d["id"],
                class_name=d["className"],
                method_name=d["methodName"],
                arity=d["arity"],
                file=d["file"],
                span_start=d["spanStart"],
                span_end=d["spanEnd"],
            )
            for d in data["decls"]
        ]
        edges = [
            CallEdge(
                caller=e["caller"],
                callee=e["callee"],
                site_count=e["siteCount"],
                sites=tuple(e["sites"]),
            )
            for e in data["edges"]
        ]
    except (OSError, KeyError, TypeError, ValueError) as exc:
        raise IndexBuildError(f"cannot load index from {path}: {exc}") from exc
    return build_index(decls, edges)


def _version_hash(decls: list[MethodDecl], edges: list[CallEdge]) -> str:
    h = hashlib.sha256()
    for d in sorted(decls, key=lambda d: d.id):
        h.update(
            f"{d.id}|{d.class_name}|{d.method_name}|{d.arity}|{d.file}|"
            f"{d.span_start}|{d.span_end}\n".encode()
        )
    for e in sorted(edges, key=lambda e: (e.caller, e.callee)):
        h.update(f"{e.caller}>{e.callee}|{','.join(map(str, e.sites))}\n".encode())
    return h.hexdigest()


# -- DOT export --------------------------------------------------------------

def to_dot(index: ProjectIndex) -> str:
    """DOT rendering of the whole graph, for debugging."""
    lines = ["digraph calls {"]
    for d in sorted(index.decls.values(), key=lambda d: d.id):
        lines.append(f'  "{d.id}" [label="{d.class_name}.{d.method_name}"];')
    for e in index.edges:
        lines.append(f'  "{e.caller}" -> "{e.callee}" [label="{e.site_count}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def neighborhood_dot(index: ProjectIndex, focus: str, depth: int = 1) -> str:
    """DOT for the caller/callee neighborhood around one method."""
    if focus not in index.decls:
        raise UnknownMethodError(focus)
    keep = {focus}
    frontier = {focus}
    for _ in range(depth):
        nxt = set()
        for m in frontier:
            nxt |= index.callers_of[m] | index.callees_of[m]
        frontier = nxt - keep
        keep |= nxt
    lines = ["digraph neighborhood {"]
    for m in sorted(keep):
        d = index.decls[m]
        shape = ' shape=box style=bold' if m == focus else ""
        lines.append(f'  "{m}" [label="{d.class_name}.{d.method_name}"{shape}];')
    for e in index.edges:
        if e.caller in keep and e.callee in keep:
            lines.append(f'  "{e.caller}" -> "{e.callee}" [label="{e.site_count}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
