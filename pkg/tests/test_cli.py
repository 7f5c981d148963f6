from __future__ import annotations

import json
import socket
import subprocess
import sys
import threading
import time

import pytest

from wandercode.cli import main
from wandercode import service
from wandercode.graph import load

from conftest import DEMO


@pytest.fixture()
def demo_idx(tmp_path):
    out = tmp_path / "demo.idx"
    assert main(["index", str(DEMO), "-o", str(out)]) == 0
    return out


def test_index_summary(tmp_path, capsys):
    out = tmp_path / "demo.idx"
    assert main(["index", str(DEMO), "-o", str(out)]) == 0
    captured = capsys.readouterr().out
    assert "3 file(s)" in captured
    assert "4 method(s)" in captured
    assert "4 edge(s) (5 call site(s))" in captured


def test_index_nonexistent_root(tmp_path, capsys):
    assert main(["index", str(tmp_path / "nope"), "-o", str(tmp_path / "x.idx")]) == 2
    assert "error" in capsys.readouterr().err


def test_index_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.idx", tmp_path / "b.idx"
    assert main(["index", str(DEMO), "-o", str(a)]) == 0
    assert main(["index", str(DEMO), "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_query_c_m3(demo_idx, capsys):
    assert main(["query", str(demo_idx), "C.m3"]) == 0
    out = capsys.readouterr().out
    assert "callers:" in out
    assert out.index("B.m2 (2)") < out.index("A.m1 (1)")
    assert "callees: (none)" in out


def test_query_unknown_id(demo_idx, capsys):
    assert main(["query", str(demo_idx), "C.zzz"]) == 3
    err = capsys.readouterr().err
    assert "unknown method" in err


def test_query_list_mode(demo_idx, capsys):
    assert main(["query", str(demo_idx), "A.m1", "--list"]) == 0
    out = capsys.readouterr().out
    assert out.count("\n  ") == 3  # 3-entry merged list


def test_query_json_matches_service_payload(demo_idx, demo_index, capsys):
    assert main(["query", str(demo_idx), "C.m3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)

    session = service.Session(index=load(demo_idx))
    text = (DEMO / "C.java").read_text()
    line = json.dumps(
        {"kind": "cursorMoved", "seq": 1,
         "payload": {"file": "C.java", "offset": text.index("{ }") + 1}}
    )
    (reply,) = service.handle_message(session, line)
    served = reply["payload"]
    for key in ("callers", "callees"):
        assert payload[key] == served[key]
    assert payload["focus"] == served["focus"]


def test_export_dot(demo_idx, capsys):
    assert main(["export-dot", str(demo_idx), "A.m1"]) == 0
    dot = capsys.readouterr().out
    assert dot.count("->") == 4


def test_export_dot_depth_zero(demo_idx, capsys):
    assert main(["export-dot", str(demo_idx), "A.m1", "--depth", "0"]) == 0
    assert "->" not in capsys.readouterr().out


def test_export_dot_unknown(demo_idx):
    assert main(["export-dot", str(demo_idx), "Q.q"]) == 3


def test_serve_bad_index(tmp_path, capsys):
    bad = tmp_path / "bad.idx"
    bad.write_text("{not json")
    assert main(["serve", str(bad), "--stdio"]) == 2


def test_report(demo_idx, capsys):
    assert main(["report", str(demo_idx)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["methods"] == 4


def test_serve_stdio_subprocess(demo_idx):
    proc = subprocess.Popen(
        [sys.executable, "-m", "wandercode.cli", "serve", str(demo_idx),
         "--stdio", "--root", str(DEMO)],
        stdin=subprocess.PIPE,
        stdout=subprocess.PIPE,
        text=True,
    )
    try:
        hello = json.dumps({"kind": "hello", "seq": 1, "payload": {}})
        getfile = json.dumps({"kind": "getFile", "seq": 2, "payload": {"file": "A.java"}})
        out, _ = proc.communicate(hello + "\n" + getfile + "\n", timeout=30)
    finally:
        proc.kill()
    lines = [json.loads(l) for l in out.splitlines() if l.strip()]
    assert lines[0]["kind"] == "hello"
    assert lines[1]["payload"]["content"] == (DEMO / "A.java").read_text()


def _tcp_roundtrip(port, messages):
    with socket.create_connection(("127.0.0.1", port), timeout=10) as sock:
        f = sock.makefile("rw", encoding="utf-8", newline="\n")
        replies = []
        for m in messages:
            f.write(json.dumps(m) + "\n")
            f.flush()
            replies.append(json.loads(f.readline()))
        return replies


def test_serve_tcp_concurrent_sessions(demo_index):
    server = service.serve_tcp(demo_index, 0, DEMO)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        text = (DEMO / "A.java").read_text()
        inside_m1 = {"kind": "cursorMoved", "seq": 1,
                     "payload": {"file": "A.java", "offset": text.index("b.m2")}}
        pin = {"kind": "pin", "seq": 2, "payload": {"pinned": True}}

        # Session 1 pins; session 2 must be unaffected.
        r1 = _tcp_roundtrip(port, [inside_m1, pin])
        assert r1[1]["payload"]["pinned"] is True
        r2 = _tcp_roundtrip(port, [{"kind": "hello", "seq": 1, "payload": {}}, inside_m1])
        assert r2[1]["payload"]["pinned"] is False
        assert r2[1]["payload"]["focus"]["id"] == "A.m1/0"
    finally:
        server.shutdown()
        server.server_close()


def test_http_bridge_sessions(demo_index):
    from urllib.request import Request, urlopen

    from wandercode.http_bridge import SESSION_HEADER, make_server

    server = make_server(demo_index, 0, DEMO)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        def rpc(message, sid=None):
            req = Request(
                f"http://127.0.0.1:{port}/rpc",
                data=json.dumps(message).encode(),
                headers={"Content-Type": "application/json"},
                method="POST",
            )
            if sid:
                req.add_header(SESSION_HEADER, sid)
            with urlopen(req, timeout=10) as resp:
                return json.loads(resp.read()), resp.headers.get(SESSION_HEADER)

        out, sid = rpc({"kind": "hello", "seq": 1, "payload": {}})
        assert out[0]["kind"] == "hello"
        text = (DEMO / "A.java").read_text()
        out, sid2 = rpc(
            {"kind": "cursorMoved", "seq": 2,
             "payload": {"file": "A.java", "offset": text.index("b.m2")}},
            sid,
        )
        assert sid2 == sid
        assert out[0]["payload"]["focus"]["id"] == "A.m1/0"
    finally:
        server.shutdown()
        server.server_close()
