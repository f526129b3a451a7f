import json
import random

import networkx as nx
import pytest

from powergraphs.export import ExportError, export_graph, from_graph6, from_json, to_dot, to_graph6, to_json
from powergraphs.fixtures import cycle_graph, k333_uu
from powergraphs.graph import SimpleGraph
from powergraphs.groups import build_group
from powergraphs.powergraph import complement_proper_power_graph
from powergraphs.specparse import parse_group_spec


def C(text):
    return complement_proper_power_graph(build_group(parse_group_spec(text)))


def hand_graph6(n, edges):
    """Encoder written from the format definition, for cross-checking."""
    bits = "".join("1" if (i, j) in edges else "0" for j in range(n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(63 + n) + "".join(chr(63 + int(bits[k : k + 6], 2)) for k in range(0, len(bits), 6))


def test_graph6_examples():
    assert to_graph6(cycle_graph(3)) == "Bw"
    assert to_graph6(SimpleGraph.empty(1)) == "@"
    assert hand_graph6(3, {(0, 1), (0, 2), (1, 2)}) == "Bw"


@pytest.mark.parametrize("seed", range(25))
def test_graph6_against_reference(seed):
    rng = random.Random(seed)
    n = rng.randint(0, 62)
    g = SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
    text = to_graph6(g)
    assert text == hand_graph6(n, set(g.edges()))
    ref = nx.to_graph6_bytes(g.to_networkx(), header=False).decode().strip()
    assert text == ref
    assert from_graph6(text) == g
    assert sorted(tuple(sorted(e)) for e in nx.from_graph6_bytes(text.encode()).edges()) == sorted(g.edges())


def test_graph6_limits():
    with pytest.raises(ExportError):
        to_graph6(SimpleGraph.empty(63))
    with pytest.raises(ExportError):
        from_graph6("Bww")
    assert from_graph6(">>graph6<<Bw\n") == cycle_graph(3)


def test_dot_labels():
    dot = to_dot(C("Z2xZ2"))
    assert dot.startswith("graph G {") and "--" in dot and "->" not in dot
    assert dot.count("(o=2)") == 3
    assert export_graph(C("Z2xZ2"), "dot").decode() == dot


@pytest.mark.parametrize("text", ["Z12", "Q8", "Z2xZ6", "D8"])
def test_json_round_trip(text):
    g = C(text)
    back = from_json(to_json(g))
    assert back == g
    assert back.element_orders == g.element_orders
    doc = json.loads(to_json(g))
    assert doc["edges"] == sorted(doc["edges"])
    assert all(i < j for i, j in doc["edges"])
    assert set(doc["vertices"][0]) == {"id", "element_order"}


def test_json_without_orders():
    g = k333_uu()
    assert from_json(to_json(g)) == g


def test_unknown_format():
    with pytest.raises(ExportError):
        export_graph(cycle_graph(3), "gml")
