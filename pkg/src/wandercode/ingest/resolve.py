"""Name-based call resolution: raw call sites to in-project call edges.

Resolution is tiered: same-class declarations win, then declarations
whose class name is referenced anywhere in the caller's file, then a
unique project-wide match. Calls that match no project declaration are
discounted as external; calls still ambiguous after the tie-breakers are
dropped and counted in diagnostics.
"""

from __future__ import annotations

from collections import defaultdict

from wandercode.graph import CallEdge
from wandercode.ingest.config import IngestConfig
from wandercode.ingest.diagnostics import Diagnostics
from wandercode.model import MethodDecl, RawCallSite

# Sentinels; neither can collide with a real declaration id.
_EXTERNAL = "<external>"
_AMBIGUOUS = "<ambiguous>"


def resolve_calls(
    decls: list[MethodDecl],
    raw: list[RawCallSite],
    config: IngestConfig | None = None,
    file_refs: dict[str, set[str]] | None = None,
    diagnostics: Diagnostics | None = None,
) -> list[CallEdge]:
    """Resolve raw call sites against project declarations.

    ``file_refs`` maps a file path to the identifiers occurring in it,
    used by the referenced-class tier; when absent that tier never fires.
    """
    diagnostics = diagnostics if diagnostics is not None else Diagnostics()
    file_refs = file_refs or {}
    by_name: dict[str, list[MethodDecl]] = defaultdict(list)
    for d in decls:
        by_name[d.method_name].append(d)
    by_id = {d.id: d for d in decls}

    grouped: dict[tuple[str, str], list[int]] = defaultdict(list)
    for site in raw:
        caller = by_id.get(site.caller)
        if caller is None:
            continue  # caller collapsed away or from a failed file
        target = _resolve_one(site, caller, by_name, file_refs)
        if target == _AMBIGUOUS:
            diagnostics.ambiguous_dropped += 1
            diagnostics.ambiguous_sites.append(
                f"{caller.file}@{site.site}: {site.callee_name}(...)"
            )
            continue
        if target == _EXTERNAL:
            diagnostics.external_dropped += 1
            continue
        grouped[(site.caller, target)].append(site.site)

    edges = [
        CallEdge(
            caller=caller_id,
            callee=callee_id,
            site_count=len(offsets),
            sites=tuple(sorted(offsets)),
        )
        for (caller_id, callee_id), offsets in grouped.items()
    ]
    edges.sort(key=lambda e: (e.caller, e.callee))
    return edges


def _resolve_one(
    site: RawCallSite,
    caller: MethodDecl,
    by_name: dict[str, list[MethodDecl]],
    file_refs: dict[str, set[str]],
) -> str:
    """Return a callee id, or the external / ambiguous sentinel."""
    candidates = by_name.get(site.callee_name)
    if not candidates:
        return _EXTERNAL

    same_class = [d for d in candidates if d.class_name == caller.class_name]
    if same_class:
        return _pick(same_class, site.arg_count)

    refs = file_refs.get(caller.file, set())
    referenced = [d for d in candidates if d.class_name in refs]
    if referenced:
        return _pick(referenced, site.arg_count)

    if len(candidates) == 1:
        return candidates[0].id
    return _AMBIGUOUS


def _pick(tier: list[MethodDecl], arg_count: int | None) -> str:
    if len(tier) == 1:
        return tier[0].id
    if arg_count is not None:
        exact = [d for d in tier if d.arity == arg_count]
        if len(exact) == 1:
            return exact[0].id
    return _AMBIGUOUS
