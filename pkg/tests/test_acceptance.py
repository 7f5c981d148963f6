"""Acceptance suite: one test per criterion, one PASS line each.

The jEdit-based criteria need a jEdit source tree; point
``WANDERCODE_JEDIT_SRC`` at one (and optionally ``WANDERCODE_JEDIT_VERSION``
at its version string) to run them. Without the corpus they are skipped,
never silently weakened.
"""

from __future__ import annotations

import json
import os
import random
import time

import pytest

from wandercode import engine, graph, service
from wandercode.ingest import IngestConfig, index_project, index_units
from wandercode.model import SourceUnit

from conftest import DEMO
from corpus import generate_corpus, oracle_call_graph, simple_name

JEDIT_SRC = os.environ.get("WANDERCODE_JEDIT_SRC")


def ok(name: str) -> None:
    print(f"ACCEPTANCE {name}: PASS")


def _jedit_index():
    config = IngestConfig(exclude=["**/test/**", "**/tests/**"])
    started = time.monotonic()
    index, units = index_project(JEDIT_SRC, config)
    elapsed = time.monotonic() - started
    return index, units, elapsed


@pytest.mark.skipif(JEDIT_SRC is None, reason="set WANDERCODE_JEDIT_SRC to a jEdit source tree")
def test_jedit_set_whole_word_has_two_callers():
    index, units, elapsed = _jedit_index()
    assert len(units) > 500
    matches = [
        m for m, d in index.decls.items()
        if d.class_name == "SearchAndReplace" and d.method_name == "setWholeWord"
    ]
    assert len(matches) == 1, matches
    n_callers = len(index.callers_of[matches[0]])
    version = os.environ.get("WANDERCODE_JEDIT_VERSION", "unspecified")
    print(f"jEdit {version}: setWholeWord callers = {n_callers}, index time {elapsed:.1f}s")
    assert n_callers == 2
    assert elapsed < 60.0
    ok("jedit-setWholeWord-two-callers")


@pytest.mark.skipif(JEDIT_SRC is None, reason="set WANDERCODE_JEDIT_SRC to a jEdit source tree")
def test_jedit_long_tail_report():
    index, _, _ = _jedit_index()
    report = graph.degree_report(index)
    # Informational: record the distribution, assert only well-formedness.
    assert report["methods"] > 0
    assert report["size_percentiles"]["max"] >= report["size_percentiles"]["p50"]
    print(json.dumps({k: report[k] for k in ("methods", "size_percentiles", "ref_count_percentiles")}))
    ok("jedit-long-tail-report")


def test_oracle_equivalence_100_corpora():
    started = time.monotonic()
    rng = random.Random(20260823)
    for i in range(100):
        files = generate_corpus(rng, max_methods=50)
        truth = oracle_call_graph(files)
        units = [SourceUnit(path=p, content=c) for p, c in sorted(files.items())]
        index = index_units(units)
        by_simple = {simple_name(m): m for m in index.decls}
        assert set(by_simple) == set(truth["ref_count"]), f"corpus {i}"
        for name, full in by_simple.items():
            assert index.ref_count[full] == truth["ref_count"][name], (i, name)
            assert {simple_name(c) for c in index.callers_of[full]} == truth["callers"][name], (i, name)
            assert {simple_name(c) for c in index.callees_of[full]} == truth["callees"][name], (i, name)
    elapsed = time.monotonic() - started
    assert elapsed < 30.0, f"oracle run took {elapsed:.1f}s"
    ok("oracle-equivalence-100-corpora")


def _event_corpus():
    rng = random.Random(99)
    files = generate_corpus(rng, max_methods=50, max_classes=4, max_calls_per_method=8)
    units = [SourceUnit(path=p, content=c) for p, c in sorted(files.items())]
    index = index_units(units)
    lengths = {u.path: len(u.content) for u in units}
    return index, lengths


def _random_walk(state, index, lengths, rng, steps, on_step):
    files = list(lengths)
    for _ in range(steps):
        kind = rng.choice(["cursor", "cursor", "cursor", "pin", "unpin", "expand", "collapse"])
        if kind == "cursor":
            f = rng.choice(files)
            state = engine.on_cursor_moved(state, index, f, rng.randrange(lengths[f]))
        elif kind in ("pin", "unpin"):
            state = engine.set_pinned(state, index, kind == "pin")
        else:
            state = engine.set_expanded(state, index, kind == "expand")
        on_step(kind, state)
    return state


def test_cap_laws_1000_sequences():
    index, lengths = _event_corpus()
    rng = random.Random(7)

    def check(_kind, state):
        cur = state.current
        if cur is None:
            return
        cap = 5 if cur.expanded else 3
        assert len(cur.callers) <= cap
        assert len(cur.callees) <= cap
        assert len(cur.callers) + len(cur.callees) <= 2 * cap

    for _ in range(1000):
        _random_walk(engine.new_session(index), index, lengths, rng, 12, check)
    ok("cap-laws-1000-sequences")


def test_pin_freeze_property():
    index, lengths = _event_corpus()
    rng = random.Random(8)

    for _ in range(300):
        state = engine.new_session(index)
        frozen = {"set": None}

        def check(kind, state):
            if state.pinned:
                if frozen["set"] is None:
                    frozen["set"] = state.current
                elif kind == "cursor":
                    assert state.current == frozen["set"]
                else:
                    frozen["set"] = state.current  # expand/collapse may re-derive
            else:
                frozen["set"] = None

        _random_walk(state, index, lengths, rng, 15, check)
    ok("pin-freeze-property")


def test_determinism_index_bytes_and_replay():
    a, _ = index_project(DEMO)
    b, _ = index_project(DEMO)
    assert graph.serialize(a) == graph.serialize(b)

    text = (DEMO / "A.java").read_text()
    log = [
        json.dumps({"kind": "hello", "seq": 1, "payload": {}}),
        json.dumps({"kind": "cursorMoved", "seq": 2,
                    "payload": {"file": "A.java", "offset": text.index("b.m2")}}),
        json.dumps({"kind": "expand", "seq": 3, "payload": {"expanded": True}}),
        json.dumps({"kind": "listMode", "seq": 4, "payload": {"list": True}}),
        json.dumps({"kind": "select", "seq": 5, "payload": {"id": "B.m2/0"}}),
    ]
    first = service.replay(service.Session(index=a, root=DEMO), log)
    second = service.replay(service.Session(index=b, root=DEMO), log)
    assert first == second
    ok("determinism-index-and-replay")


def test_demo_fixture_exact_values(demo_index):
    assert {m: demo_index.ref_count[m] for m in demo_index.decls} == {
        "A.m1/0": 1, "B.m2/0": 2, "C.m3/0": 2, "A.m4/0": 0,
    }
    assert graph.callers(demo_index, "C.m3/0") == {"A.m1/0", "B.m2/0"}
    assert graph.callees(demo_index, "A.m1/0") == {"B.m2/0", "C.m3/0"}
    ok("demo-fixture-golden-values")
