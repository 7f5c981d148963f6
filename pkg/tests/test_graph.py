from __future__ import annotations

import random

import pytest

from wandercode.graph import (
    CallEdge,
    IndexBuildError,
    UnknownMethodError,
    build_index,
    callers,
    callees,
    degree_report,
    load,
    neighborhood_dot,
    save,
    serialize,
    to_dot,
)
from wandercode.ingest import index_units
from wandercode.model import MethodDecl, SourceUnit

from corpus import generate_corpus


def mk_decl(cls, name, file=None, start=0, end=10):
    return MethodDecl(
        id=f"{cls}.{name}/0",
        class_name=cls,
        method_name=name,
        arity=0,
        file=file or f"{cls}.java",
        span_start=start,
        span_end=end,
    )


def test_empty_index():
    index = build_index([], [])
    assert index.decls == {} and index.edges == ()
    assert degree_report(index)["size_histogram"] == {}


def test_single_method_no_calls():
    index = build_index([mk_decl("A", "m")], [])
    assert index.ref_count["A.m/0"] == 0
    assert index.callers_of["A.m/0"] == frozenset()


def test_demo_ref_counts(demo_index):
    assert {m: demo_index.ref_count[m] for m in demo_index.decls} == {
        "A.m1/0": 1,
        "B.m2/0": 2,
        "C.m3/0": 2,
        "A.m4/0": 0,
    }


def test_demo_callers_and_callees(demo_index):
    assert callers(demo_index, "C.m3/0") == {"A.m1/0", "B.m2/0"}
    assert callers(demo_index, "A.m4/0") == frozenset()
    assert callees(demo_index, "A.m1/0") == {"B.m2/0", "C.m3/0"}
    assert callees(demo_index, "C.m3/0") == frozenset()
    assert callees(demo_index, "A.m4/0") == {"A.m1/0"}


def test_unknown_id_raises(demo_index):
    with pytest.raises(UnknownMethodError):
        callers(demo_index, "Z.zz/0")
    with pytest.raises(UnknownMethodError):
        callees(demo_index, "Z.zz/0")


def test_dangling_edge_is_fatal():
    with pytest.raises(IndexBuildError):
        build_index([mk_decl("A", "m")], [CallEdge("A.m/0", "B.x/0", 1, (5,))])


def test_transpose_consistency():
    rng = random.Random(11)
    for _ in range(10):
        files = generate_corpus(rng)
        units = [SourceUnit(path=p, content=c) for p, c in sorted(files.items())]
        index = index_units(units)
        for m in index.decls:
            for n in index.callers_of[m]:
                assert m in index.callees_of[n]
            for n in index.callees_of[m]:
                assert m in index.callers_of[n]


def test_count_conservation(demo_index):
    assert sum(demo_index.ref_count.values()) == sum(
        e.site_count for e in demo_index.edges
    )


def test_demo_degree_report(demo_index):
    report = degree_report(demo_index)
    # |callers| + |callees| per method; B.m2 has one caller (two sites from
    # the same method) and one callee.
    assert report["candidate_sizes"] == {
        "A.m1/0": 3,
        "A.m4/0": 1,
        "B.m2/0": 2,
        "C.m3/0": 2,
    }


def test_roundtrip_persistence(tmp_path, demo_index):
    path = tmp_path / "demo.idx"
    save(demo_index, path)
    again = load(path)
    assert serialize(again) == serialize(demo_index)
    assert again.version == demo_index.version


def test_rebuild_same_version(demo_index):
    rebuilt = build_index(list(demo_index.decls.values()), list(demo_index.edges))
    assert rebuilt.version == demo_index.version


def test_full_dot_contains_all_edges(demo_index):
    dot = to_dot(demo_index)
    assert dot.count("->") == len(demo_index.edges)


def test_neighborhood_dot_demo(demo_index):
    dot = neighborhood_dot(demo_index, "A.m1/0", depth=1)
    assert dot.count("label=") - dot.count("->") == 4  # 4 nodes
    assert dot.count("->") == 4


def test_neighborhood_depth_zero(demo_index):
    dot = neighborhood_dot(demo_index, "C.m3/0", depth=0)
    assert '"C.m3/0"' in dot
    assert "->" not in dot


def test_neighborhood_leaf(demo_index):
    dot = neighborhood_dot(demo_index, "A.m4/0", depth=1)
    assert dot.count("->") == 1  # A.m4 -> A.m1 only
