"""Wire protocol service hosting engine sessions for editors and the UI.

Transport is newline-delimited JSON. Every request carries a positive
``seq`` and receives exactly one response (or error) echoing that seq;
server-initiated pushes would carry seq 0. State-affecting requests
(cursorMoved, pin, expand, listMode) are answered with a
``recommendations`` message describing the session's current view, with a
``changed`` flag saying whether this request altered the published set.
See docs/protocol.md for the full schema.
"""

from __future__ import annotations

import json
import logging
import socketserver
import sys
from dataclasses import dataclass, field
from pathlib import Path

from wandercode import engine
from wandercode.graph import ProjectIndex, UnknownMethodError
from wandercode.ranker import RankedRecommendation, rank_candidates, top_k

logger = logging.getLogger(__name__)

PROTOCOL_VERSION = 1


@dataclass
class Session:
    """One client connection: engine state plus presentation mode."""

    index: ProjectIndex
    root: Path | None = None
    mode: str = "graph"  # "graph" | "list"
    state: engine.SessionState = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.state is None:
            self.state = engine.new_session(self.index)


def merged_list(
    recs: engine.RecommendationSet, index: ProjectIndex
) -> list[RankedRecommendation]:
    """Callers and callees re-ranked as one list (the control tool's view),
    truncated to twice the active per-side cap."""
    cap = engine.CAP_EXPANDED if recs.expanded else engine.CAP_COLLAPSED
    ids = {r.id for r in recs.callers} | {r.id for r in recs.callees}
    return top_k(rank_candidates(index, ids), 2 * cap)


def _entry(r: RankedRecommendation) -> dict:
    return {
        "id": r.id,
        "methodName": r.method_name,
        "className": r.class_name,
        "file": r.file,
        "spanStart": r.span_start,
        "relevance": r.relevance,
        "rank": r.rank,
    }


def recommendations_payload(session: Session, changed: bool) -> dict:
    recs = session.state.current
    payload: dict = {
        "mode": session.mode,
        "pinned": session.state.pinned,
        "expanded": session.state.expanded,
        "changed": changed,
    }
    if recs is None:
        payload["focus"] = None
        return payload
    d = session.index.decls[recs.focus]
    payload["focus"] = {
        "id": d.id,
        "methodName": d.method_name,
        "className": d.class_name,
        "file": d.file,
        "spanStart": d.span_start,
    }
    if session.mode == "list":
        payload["merged"] = [_entry(r) for r in merged_list(recs, session.index)]
    else:
        payload["callers"] = [_entry(r) for r in recs.callers]
        payload["callees"] = [_entry(r) for r in recs.callees]
    return payload


def handle_message(session: Session, line: str) -> list[dict]:
    """Dispatch one raw message line; always returns the messages to send."""
    try:
        msg = json.loads(line)
        if not isinstance(msg, dict):
            raise ValueError("message must be an object")
    except ValueError as exc:
        return [_error(0, f"malformed message: {exc}")]
    seq = msg.get("seq", 0)
    if not isinstance(seq, int):
        seq = 0
    kind = msg.get("kind")
    payload = msg.get("payload") or {}
    try:
        return _dispatch(session, kind, payload, seq)
    except engine.UnknownFileError as exc:
        return [_error(seq, f"unknown file: {exc}")]
    except engine.SelectionError as exc:
        return [_error(seq, f"stale selection: {exc}")]
    except UnknownMethodError as exc:
        return [_error(seq, f"unknown method: {exc}")]
    except (KeyError, TypeError, ValueError) as exc:
        return [_error(seq, f"bad payload: {exc!r}")]


def _dispatch(session: Session, kind: str, payload: dict, seq: int) -> list[dict]:
    if kind == "hello":
        return [
            {
                "kind": "hello",
                "seq": seq,
                "payload": {
                    "server": "wandercode",
                    "protocolVersion": PROTOCOL_VERSION,
                    "indexVersion": session.index.version,
                },
            }
        ]
    if kind == "cursorMoved":
        before = session.state.current
        session.state = engine.on_cursor_moved(
            session.state, session.index, payload["file"], int(payload["offset"])
        )
        return [_recs(session, seq, changed=session.state.current != before)]
    if kind == "pin":
        before = session.state.current
        session.state = engine.set_pinned(
            session.state, session.index, bool(payload.get("pinned", True))
        )
        return [_recs(session, seq, changed=session.state.current != before)]
    if kind == "expand":
        before = session.state.current
        session.state = engine.set_expanded(
            session.state, session.index, bool(payload.get("expanded", True))
        )
        return [_recs(session, seq, changed=session.state.current != before)]
    if kind == "listMode":
        # Presentation only: never touches pin/expand/focus.
        session.mode = "list" if payload.get("list", True) else "graph"
        return [_recs(session, seq, changed=False)]
    if kind == "select":
        target = engine.on_select(session.state, session.index, payload["id"])
        return [
            {
                "kind": "navigation",
                "seq": seq,
                "payload": {
                    "id": target.id,
                    "file": target.file,
                    "spanStart": target.span_start,
                },
            }
        ]
    if kind == "getFile":
        return [_file_content(session, payload["file"], seq)]
    if kind == "diagnostics":
        return [
            {
                "kind": "diagnostics",
                "seq": seq,
                "payload": {
                    "methods": len(session.index.decls),
                    "edges": len(session.index.edges),
                    "indexVersion": session.index.version,
                },
            }
        ]
    return [_error(seq, f"unknown kind: {kind!r}")]


def _recs(session: Session, seq: int, changed: bool) -> dict:
    return {
        "kind": "recommendations",
        "seq": seq,
        "payload": recommendations_payload(session, changed),
    }


def _file_content(session: Session, file: str, seq: int) -> dict:
    if session.root is None:
        raise ValueError("service has no source root configured")
    base = session.root.resolve()
    path = (base / file).resolve()
    if base not in path.parents and path != base:
        raise ValueError(f"path escapes project root: {file}")
    if not path.is_file():
        raise engine.UnknownFileError(file)
    content = path.read_bytes().decode("utf-8", errors="replace")
    return {
        "kind": "fileContent",
        "seq": seq,
        "payload": {"file": file, "content": content},
    }


def _error(seq: int, message: str) -> dict:
    return {"kind": "error", "seq": seq, "payload": {"message": message}}


def encode(msg: dict) -> str:
    return json.dumps(msg, sort_keys=True, separators=(",", ":"))


def replay(session: Session, lines: list[str]) -> list[str]:
    """Run a recorded message log through a session; returns encoded output."""
    out: list[str] = []
    for line in lines:
        if not line.strip():
            continue
        out.extend(encode(m) for m in handle_message(session, line))
    return out


# -- transports --------------------------------------------------------------

def serve_stdio(index: ProjectIndex, root: Path | None = None) -> None:
    """One session over stdin/stdout, newline-delimited JSON."""
    session = Session(index=index, root=root)
    for line in sys.stdin:
        if not line.strip():
            continue
        for msg in handle_message(session, line):
            sys.stdout.write(encode(msg) + "\n")
        sys.stdout.flush()


def serve_tcp(index: ProjectIndex, port: int, root: Path | None = None) -> "socketserver.ThreadingTCPServer":
    """Concurrent sessions, one per connection, over local TCP.

    Returns the server; call ``serve_forever`` (or use it from cmd_serve).
    """

    class Handler(socketserver.StreamRequestHandler):
        def handle(self) -> None:
            session = Session(index=index, root=root)
            for raw in self.rfile:
                line = raw.decode("utf-8", errors="replace")
                if not line.strip():
                    continue
                for msg in handle_message(session, line):
                    self.wfile.write((encode(msg) + "\n").encode("utf-8"))
                self.wfile.flush()

    class Server(socketserver.ThreadingTCPServer):
        allow_reuse_address = True
        daemon_threads = True

    return Server(("127.0.0.1", port), Handler)
