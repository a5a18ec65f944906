import json
import os

from twosilt import enumerate_2silt
from twosilt.emit import (
    atomic_write,
    graph_to_json,
    graph_to_csv,
    graph_to_dot,
    json_to_gmatrices,
    csv_to_gmatrices,
    presentation_to_dsl,
)
from twosilt import resolve_presentation


def test_json_round_trip(square):
    graph, report = enumerate_2silt(square)
    text = graph_to_json(graph, report)
    doc = json.loads(text)
    assert doc["node_count"] == 46
    assert doc["exploration"]["status"] == "complete"
    assert "seconds" not in doc["exploration"]
    assert json_to_gmatrices(text) == set(graph.nodes)


def test_csv_round_trip(square):
    graph, _ = enumerate_2silt(square)
    text = graph_to_csv(graph)
    assert csv_to_gmatrices(text) == set(graph.nodes)
    header = text.splitlines()[0]
    assert header == "node,tau_tilting,g0,g1,g2,g3"


def test_deterministic_output(square):
    g1, r1 = enumerate_2silt(square)
    g2, r2 = enumerate_2silt(square)
    assert graph_to_json(g1, r1) == graph_to_json(g2, r2)
    assert graph_to_csv(g1) == graph_to_csv(g2)
    assert graph_to_dot(g1) == graph_to_dot(g2)


def test_dot_shapes(bipartite):
    from twosilt import enumerate_2silt_epsilon
    graph, _ = enumerate_2silt_epsilon(bipartite, "+,-,+,-")
    dot = graph_to_dot(graph)
    assert dot.startswith("digraph")
    assert dot.count("shape=circle") == 8
    assert dot.count("shape=box") == 6
    # no floats anywhere in emitted data
    assert "." not in dot.replace("rankdir=TB;", "")


def test_two_node_graph():
    from twosilt import semisimple_algebra, QQ
    S = semisimple_algebra(QQ, ["x"])
    graph, _ = enumerate_2silt(S)
    dot = graph_to_dot(graph)
    assert dot.count("shape=") == 2
    assert dot.count("->") == 1


def test_presentation_dsl_emit():
    pres = resolve_presentation("square")
    text = presentation_to_dsl(pres)
    assert text.endswith("\n")
    assert "rel a*c - b*d" in text


def test_atomic_write(tmp_path):
    path = os.path.join(tmp_path, "out.txt")
    atomic_write(path, "hello\n")
    with open(path) as fh:
        assert fh.read() == "hello\n"
    atomic_write(path, "replaced\n")
    with open(path) as fh:
        assert fh.read() == "replaced\n"
    assert os.listdir(tmp_path) == ["out.txt"]
