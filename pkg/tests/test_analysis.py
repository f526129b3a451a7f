import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powergraphs import analysis as ga
from powergraphs.analysis import (
    complete_multipartite,
    contains_complete_bipartite_subgraph,
    recognize_complete_multipartite,
)
from powergraphs.fixtures import cycle_graph, path_graph
from powergraphs.graph import SimpleGraph
from powergraphs.groups import build_group
from powergraphs.isomorphism import is_isomorphic
from powergraphs.powergraph import complement_proper_power_graph
from powergraphs.specparse import parse_group_spec

from . import oracles


def C(text):
    return complement_proper_power_graph(build_group(parse_group_spec(text)))


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph(n, [e for e, b in zip(pairs, bits) if b])


def test_component_examples():
    assert ga.component_count(C("Z12")) == 5
    assert ga.component_count(C("Z8")) == 7
    assert ga.component_count(C("Q16")) == 2


def test_diameter_examples():
    assert ga.diameter(C("Z2^3")) == 1
    assert ga.diameter(C("S3")) == 2
    assert ga.diameter(C("Z12")) == math.inf


def test_girth_examples():
    assert ga.girth(C("Z9")) == math.inf
    assert ga.girth(C("Z18")) == 4
    assert ga.girth(C("Z2xZ2")) == 3


def test_property_record_examples():
    r = ga.property_record(C("Z2^4"))
    assert r.is_complete and C("Z2^4") == SimpleGraph.complete(15)
    assert ga.property_record(C("A4")).is_claw_free
    assert not ga.property_record(C("Z4xZ2")).is_claw_free
    assert ga.property_record(C("Z18")).is_bipartite


def test_complete_bipartite_examples():
    assert contains_complete_bipartite_subgraph(C("Z28"), 3, 6)
    assert not contains_complete_bipartite_subgraph(C("Z20"), 3, 7)
    assert not contains_complete_bipartite_subgraph(SimpleGraph.empty(9), 1, 1)


def test_z20_k37_by_brute_force():
    a = oracles.adjacency_matrix(C("Z20"))
    assert not oracles.has_kmn(a, 3, 7)
    assert oracles.has_kmn(a, 2, 4)


def test_multipartite_examples():
    assert recognize_complete_multipartite(C("Z3xZ3")) == [2, 2, 2, 2]
    assert recognize_complete_multipartite(path_graph(4)) is None


@pytest.mark.parametrize("sizes", [[1], [3], [1, 1], [2, 3], [2, 2, 2], [1, 4, 4], [5, 1, 2, 2]])
def test_multipartite_reconstructs(sizes):
    g = complete_multipartite(sizes)
    found = recognize_complete_multipartite(g)
    assert found == sorted(sizes)
    assert is_isomorphic(complete_multipartite(found), g)


def test_shape_predicates():
    assert ga.is_cycle(cycle_graph(3)) and ga.is_cycle(cycle_graph(6))
    assert not ga.is_cycle(path_graph(4))
    assert ga.is_path(path_graph(5)) and not ga.is_path(cycle_graph(5))
    assert ga.is_star(complete_multipartite([1, 4])) and not ga.is_star(cycle_graph(4))
    assert ga.find_claw(complete_multipartite([1, 3])) is not None


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_against_brute_force(g):
    a = oracles.adjacency_matrix(g)
    assert ga.diameter(g) == oracles.diameter(a)
    assert ga.girth(g) == oracles.girth(a)
    assert ga.is_claw_free(g) == (not oracles.has_induced_claw(a))
    assert ga.is_bipartite(g) == oracles.is_bipartite(a)
    assert ga.is_triangle_free(g) == (not oracles.has_triangle(a))
    assert ga.component_count(g) == oracles.components(a)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8), st.integers(1, 3), st.integers(1, 4))
def test_kmn_against_brute_force(g, m, n):
    a = oracles.adjacency_matrix(g)
    assert contains_complete_bipartite_subgraph(g, m, n) == oracles.has_kmn(a, m, n)


@pytest.mark.parametrize("text", ["Z12", "Z4xZ2", "D12", "Q16", "S4", "A4", "Z2^5", "M27", "Z6xZ6"])
def test_claw_free_matches_4_subsets(text):
    g = C(text)
    assert g.n <= 40
    assert ga.is_claw_free(g) == (not oracles.has_induced_claw(oracles.adjacency_matrix(g)))


@pytest.mark.parametrize("order", [12, 20, 24, 28, 36])
def test_dicyclic_non_2_power_has_diameter_3(order):
    # the unique involution only meets odd-order powers of a, all inside <a>
    g = C(f"Q{order}")
    assert ga.diameter(g) == oracles.diameter(oracles.adjacency_matrix(g)) == 3
