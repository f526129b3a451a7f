"""Named test graphs: complete, complete bipartite and multipartite, cycles, paths, and K^{u,u'}_{3,3,3}."""

from __future__ import annotations

from .analysis import complete_multipartite
from .graph import SimpleGraph


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.complete(n)


def complete_bipartite(m: int, n: int) -> SimpleGraph:
    g = complete_multipartite([m, n])
    g.name = f"K{m},{n}"
    return g


def balanced_multipartite(k: int, s: int) -> SimpleGraph:
    """K(k, s): ``k`` parts of size ``s``."""
    g = complete_multipartite([s] * k)
    g.name = f"K({k},{s})"
    return g


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def k333() -> SimpleGraph:
    """K_{3,3,3} with parts {0,1,2}, {3,4,5}, {6,7,8}."""
    g = complete_multipartite([3, 3, 3])
    g.name = "K3,3,3"
    return g


def k333_uu() -> SimpleGraph:
    """K_{3,3,3} plus non-adjacent vertices 9 and 10, each joined to the transversal triangle 0, 3, 6."""
    base = k333()
    edges = list(base.edges())
    for extra in (9, 10):
        edges += [(v, extra) for v in (0, 3, 6)]
    return SimpleGraph(11, edges, name="K3,3,3^uu'")


def fixture_graphs() -> dict[str, SimpleGraph]:
    out: dict[str, SimpleGraph] = {}
    for n in range(1, 9):
        out[f"K{n}"] = complete_graph(n)
    for m in range(1, 8):
        for n in range(m, 8):
            out[f"K{m},{n}"] = complete_bipartite(m, n)
    out["K3,3,3"] = k333()
    out["K3,3,3^uu'"] = k333_uu()
    for n in range(3, 9):
        out[f"C{n}"] = cycle_graph(n)
    for n in range(1, 9):
        out[f"P{n}"] = path_graph(n)
    for k, s in [(3, 1), (3, 2), (4, 2), (6, 4), (8, 6)]:
        out[f"K({k},{s})"] = balanced_multipartite(k, s)
    return out
