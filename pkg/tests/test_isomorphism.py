import itertools
import random

import pytest

from powergraphs.analysis import SearchBoundError
from powergraphs.fixtures import complete_bipartite, complete_graph, cycle_graph, k333_uu
from powergraphs.graph import SimpleGraph
from powergraphs.groups import build_group
from powergraphs.isomorphism import find_isomorphism, is_isomorphic
from powergraphs.powergraph import complement_proper_power_graph
from powergraphs.specparse import parse_group_spec


def C(text):
    return complement_proper_power_graph(build_group(parse_group_spec(text)))


def brute_isomorphic(g1, g2):
    if g1.n != g2.n:
        return False
    e1 = set(g1.edges())
    return any(
        {tuple(sorted((p[u], p[v]))) for u, v in e1} == set(g2.edges()) for p in itertools.permutations(range(g1.n))
    )


def test_examples():
    assert is_isomorphic(C("Z2xZ2"), cycle_graph(3))
    assert is_isomorphic(C("Z2xZ6"), k333_uu())
    k3_plus = SimpleGraph(4, [(0, 1), (1, 2), (0, 2)])
    assert not is_isomorphic(complete_bipartite(1, 3), k3_plus)


def test_returned_map_is_an_isomorphism():
    g1, g2 = C("Z2xZ6"), k333_uu()
    phi = find_isomorphism(g1, g2)
    assert sorted(phi) == list(range(11))
    assert {tuple(sorted((phi[u], phi[v]))) for u, v in g1.edges()} == set(g2.edges())


def test_relabelled_graphs():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 9)
        g = SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        perm = list(range(n))
        rng.shuffle(perm)
        h = SimpleGraph(n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert is_isomorphic(g, h)


def test_against_brute_force_small():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(1, 6)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g1 = SimpleGraph(n, [e for e in pairs if rng.random() < 0.5])
        g2 = SimpleGraph(n, [e for e in pairs if rng.random() < 0.5])
        assert is_isomorphic(g1, g2) == brute_isomorphic(g1, g2)


def test_regular_non_isomorphic():
    # C6 versus two triangles: same degrees, refinement cannot split them
    two_triangles = SimpleGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_isomorphic(cycle_graph(6), two_triangles)


def test_size_bound():
    with pytest.raises(SearchBoundError):
        is_isomorphic(complete_graph(20), complete_graph(20))
    assert is_isomorphic(complete_graph(20), complete_graph(20), max_vertices=None)
