"""Relevance ranking of candidate recommendations.

Relevance defaults to project-wide reference frequency (how many call
sites target the method anywhere in the project). The ``edge_local``
variant ranks by the number of sites on the specific edge to the focus
method instead; it exists as a config knob and is off by default.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from wandercode.graph import ProjectIndex


@dataclass(frozen=True)
class RankedRecommendation:
    id: str
    method_name: str
    class_name: str
    file: str
    span_start: int
    relevance: int
    rank: int


def rank_candidates(
    index: ProjectIndex,
    candidates: Iterable[str],
    relevance: str = "global",
    focus: str | None = None,
) -> list[RankedRecommendation]:
    """Order candidates by relevance, descending; deterministic total order.

    Ties break on ascending (class name, method name, file), so the result
    never depends on iteration order of the candidate set.
    """
    scored = []
    for m in candidates:
        d = index.decls[m]
        if relevance == "edge_local" and focus is not None:
            score = _edge_sites(index, focus, m)
        else:
            score = index.ref_count[m]
        scored.append(((-score, d.class_name, d.method_name, d.file), d, score))
    scored.sort(key=lambda t: t[0])
    return [
        RankedRecommendation(
            id=d.id,
            method_name=d.method_name,
            class_name=d.class_name,
            file=d.file,
            span_start=d.span_start,
            relevance=score,
            rank=pos,
        )
        for pos, (_, d, score) in enumerate(scored, start=1)
    ]


def top_k(ranked: list[RankedRecommendation], k: int) -> list[RankedRecommendation]:
    """First min(k, len) entries, order preserved."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return ranked[:k]


def _edge_sites(index: ProjectIndex, focus: str, other: str) -> int:
    total = 0
    for e in index.edges:
        if (e.caller == focus and e.callee == other) or (
            e.caller == other and e.callee == focus
        ):
            total += e.site_count
    return total
