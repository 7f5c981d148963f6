"""Mixed-initiative recommendation state machine.

The engine maps the editor cursor to a focus method, publishes capped
caller/callee recommendations, and honors pin (freeze against cursor
updates), expand (raise the per-side cap from 3 to 5), and selection
(answer with a navigation target). All operations are pure: they take a
SessionState and return a new one, so replaying an event sequence over
the same index always yields the same published sets.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from wandercode.graph import ProjectIndex, UnknownMethodError
from wandercode.ranker import RankedRecommendation, rank_candidates, top_k

CAP_COLLAPSED = 3
CAP_EXPANDED = 5


class UnknownFileError(Exception):
    """Cursor event for a file with no indexed declarations."""


class SelectionError(Exception):
    """Selection of an id that is not in the current recommendation set."""


@dataclass(frozen=True)
class RecommendationSet:
    focus: str
    callers: tuple[RankedRecommendation, ...]
    callees: tuple[RankedRecommendation, ...]
    expanded: bool
    pinned: bool


@dataclass(frozen=True)
class SessionState:
    index_version: str
    pinned: bool = False
    expanded: bool = False
    current: RecommendationSet | None = None
    focus_source: tuple[str, int] | None = None
    relevance: str = "global"


def new_session(index: ProjectIndex, relevance: str = "global") -> SessionState:
    return SessionState(index_version=index.version, relevance=relevance)


def focus_from_cursor(index: ProjectIndex, file: str, offset: int) -> str | None:
    """Innermost declaration whose span contains offset (start inclusive,
    end exclusive), or None when the cursor is outside every method."""
    in_file = [d for d in index.decls.values() if d.file == file]
    if not in_file:
        raise UnknownFileError(file)
    best = None
    for d in in_file:
        if d.contains(offset) and (best is None or d.span_start > best.span_start):
            best = d
    return best.id if best else None


def on_cursor_moved(
    state: SessionState, index: ProjectIndex, file: str, offset: int
) -> SessionState:
    """Recompute recommendations for the new cursor position.

    While pinned only the remembered cursor changes; the published set is
    frozen until unpin.
    """
    focus = focus_from_cursor(index, file, offset)  # raises for unknown file
    state = replace(state, focus_source=(file, offset))
    if state.pinned:
        return state
    if focus is None:
        return replace(state, current=None)
    return replace(state, current=_compute(state, index, focus))


def set_pinned(state: SessionState, index: ProjectIndex, flag: bool) -> SessionState:
    """Pin freezes the current set; unpin recomputes from the last cursor."""
    if flag == state.pinned:
        return state
    state = replace(state, pinned=flag)
    if state.current is not None:
        state = replace(state, current=replace(state.current, pinned=flag))
    if not flag and state.focus_source is not None:
        file, offset = state.focus_source
        try:
            focus = focus_from_cursor(index, file, offset)
        except UnknownFileError:
            focus = None
        current = _compute(state, index, focus) if focus else None
        state = replace(state, current=current)
    return state


def set_expanded(state: SessionState, index: ProjectIndex, flag: bool) -> SessionState:
    """Expansion changes how much of the same recommendation set is shown:
    it re-derives the lists for the current focus even while pinned."""
    state = replace(state, expanded=flag)
    if state.current is not None:
        state = replace(state, current=_compute(state, index, state.current.focus))
    return state


@dataclass(frozen=True)
class NavigationTarget:
    file: str
    span_start: int
    id: str


def on_select(state: SessionState, index: ProjectIndex, m: str) -> NavigationTarget:
    """Resolve a clicked recommendation to its code location.

    Only ids present in the current set (focus, a caller, or a callee) are
    accepted; anything else is a stale UI click.
    """
    if state.current is None:
        raise SelectionError(m)
    cur = state.current
    valid = {cur.focus} | {r.id for r in cur.callers} | {r.id for r in cur.callees}
    if m not in valid:
        raise SelectionError(m)
    if m not in index.decls:
        raise UnknownMethodError(m)
    d = index.decls[m]
    return NavigationTarget(file=d.file, span_start=d.span_start, id=d.id)


def _compute(state: SessionState, index: ProjectIndex, focus: str) -> RecommendationSet:
    cap = CAP_EXPANDED if state.expanded else CAP_COLLAPSED
    caller_ids = index.callers_of[focus]
    callee_ids = index.callees_of[focus]
    return RecommendationSet(
        focus=focus,
        callers=tuple(
            top_k(rank_candidates(index, caller_ids, state.relevance, focus), cap)
        ),
        callees=tuple(
            top_k(rank_candidates(index, callee_ids, state.relevance, focus), cap)
        ),
        expanded=state.expanded,
        pinned=state.pinned,
    )
