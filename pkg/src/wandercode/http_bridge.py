"""HTTP bridge for browser clients.

Browsers cannot open raw TCP sockets, so the same protocol is exposed as
``POST /rpc``: the request body is one protocol message, the response body
is a JSON array of the messages the server would have written to the
stream. Sessions are keyed by the ``X-Wandercode-Session`` header; a
``hello`` without the header creates one and returns its id in the
response payload. Optionally serves a static UI directory at ``/``.
"""

from __future__ import annotations

import logging
import threading
import uuid
from http import HTTPStatus
from http.server import SimpleHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from wandercode.graph import ProjectIndex
from wandercode.service import Session, encode, handle_message

logger = logging.getLogger(__name__)

SESSION_HEADER = "X-Wandercode-Session"


def make_server(
    index: ProjectIndex,
    port: int,
    root: Path | None = None,
    ui_dir: Path | None = None,
) -> ThreadingHTTPServer:
    sessions: dict[str, tuple[Session, threading.Lock]] = {}
    registry_lock = threading.Lock()

    class Handler(SimpleHTTPRequestHandler):
        def __init__(self, *args, **kwargs):
            super().__init__(*args, directory=str(ui_dir) if ui_dir else None, **kwargs)

        def log_message(self, fmt, *args):  # route through logging, not stderr
            logger.debug("http: " + fmt, *args)

        def do_GET(self):
            if ui_dir is None:
                self.send_error(HTTPStatus.NOT_FOUND, "no UI bundled")
                return
            super().do_GET()

        def do_POST(self):
            if self.path != "/rpc":
                self.send_error(HTTPStatus.NOT_FOUND)
                return
            length = int(self.headers.get("Content-Length", "0"))
            body = self.rfile.read(length).decode("utf-8", errors="replace")

            sid = self.headers.get(SESSION_HEADER)
            with registry_lock:
                if sid is None or sid not in sessions:
                    sid = uuid.uuid4().hex
                    sessions[sid] = (Session(index=index, root=root), threading.Lock())
                session, session_lock = sessions[sid]

            # Each session is a serialized event loop: one message at a time.
            with session_lock:
                out = handle_message(session, body)

            data = ("[" + ",".join(encode(m) for m in out) + "]").encode("utf-8")
            self.send_response(HTTPStatus.OK)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(data)))
            self.send_header(SESSION_HEADER, sid)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Expose-Headers", SESSION_HEADER)
            self.end_headers()
            self.wfile.write(data)

        def do_OPTIONS(self):
            self.send_response(HTTPStatus.NO_CONTENT)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Headers", f"Content-Type, {SESSION_HEADER}")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.end_headers()

    server = ThreadingHTTPServer(("127.0.0.1", port), Handler)
    server.daemon_threads = True
    return server
