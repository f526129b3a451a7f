"""Structural graph properties: connectivity, distances, cycles, forbidden subgraphs."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import asdict, dataclass

from .graph import SimpleGraph, iter_bits

INF = math.inf

DEFAULT_BIPARTITE_BOUNDS = (8, 12)


class SearchBoundError(ValueError):
    """A bounded search was asked for an instance beyond its configured limits."""


@dataclass(frozen=True)
class PropertyRecord:
    is_complete: bool
    is_bipartite: bool
    is_triangle_free: bool
    is_claw_free: bool
    is_path: bool
    is_star: bool
    is_cycle: bool
    isolated_vertex_count: int
    component_count: int
    diameter: float  # int, or math.inf when disconnected
    girth: float  # int, or math.inf when acyclic

    def as_dict(self) -> dict:
        return asdict(self)


# ---------------------------------------------------------------- connectivity


def components(g: SimpleGraph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(iter_bits(comp)))
    return out


def component_count(g: SimpleGraph) -> int:
    return len(components(g))


def is_connected(g: SimpleGraph) -> bool:
    return g.n <= 1 or component_count(g) == 1


def eccentricity(g: SimpleGraph, s: int) -> float:
    reached = 1 << s
    frontier = reached
    depth = 0
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~reached
        if not frontier:
            break
        reached |= frontier
        depth += 1
    return depth if reached.bit_count() == g.n else INF


def diameter(g: SimpleGraph) -> float:
    """Largest eccentricity; ``math.inf`` if disconnected, 0 for a single vertex."""
    if g.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    best = 0
    for s in range(g.n):
        e = eccentricity(g, s)
        if e == INF:
            return INF
        best = max(best, e)
    return best


def girth(g: SimpleGraph) -> float:
    """Length of a shortest cycle (``math.inf`` for forests)."""
    best = INF
    nbrs = [g.neighbors(v) for v in range(g.n)]
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in nbrs[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            break
    return best


# ---------------------------------------------------------------- local structure


def is_complete(g: SimpleGraph) -> bool:
    full = (1 << g.n) - 1
    return all(m == full & ~(1 << v) for v, m in enumerate(g.adj))


def is_triangle_free(g: SimpleGraph) -> bool:
    return not any(g.adj[u] & g.adj[v] for u, v in g.edges())


def is_bipartite(g: SimpleGraph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.adj[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def find_claw(g: SimpleGraph) -> tuple[int, int, int, int] | None:
    """An induced K_{1,3} as ``(centre, a, b, c)``, or None."""
    order = sorted(range(g.n), key=g.degree, reverse=True)
    for v in order:
        nb = g.adj[v]
        if nb.bit_count() < 3:
            continue
        for a in iter_bits(nb):
            cand = nb & ~g.adj[a] & ~(1 << a) & ~((1 << (a + 1)) - 1)
            for b in iter_bits(cand):
                rest = cand & ~g.adj[b] & ~((1 << (b + 1)) - 1)
                if rest:
                    return v, a, b, (rest & -rest).bit_length() - 1
    return None


def is_claw_free(g: SimpleGraph) -> bool:
    return find_claw(g) is None


def is_path(g: SimpleGraph) -> bool:
    """Path on at least two vertices."""
    if g.n < 2 or g.num_edges() != g.n - 1 or max(g.degrees()) > 2:
        return False
    return is_connected(g)


def is_star(g: SimpleGraph) -> bool:
    """K_{1,s} with s >= 1."""
    if g.n < 2 or g.num_edges() != g.n - 1:
        return False
    return max(g.degrees()) == g.n - 1


def is_cycle(g: SimpleGraph) -> bool:
    if g.n < 3 or any(d != 2 for d in g.degrees()):
        return False
    return is_connected(g)


def property_record(g: SimpleGraph) -> PropertyRecord:
    comps = components(g)
    gr = girth(g)
    return PropertyRecord(
        is_complete=is_complete(g),
        is_bipartite=is_bipartite(g),
        is_triangle_free=gr > 3,
        is_claw_free=is_claw_free(g),
        is_path=is_path(g),
        is_star=is_star(g),
        is_cycle=is_cycle(g),
        isolated_vertex_count=len(g.isolated_vertices()),
        component_count=len(comps),
        diameter=diameter(g) if len(comps) == 1 else (INF if g.n > 1 else 0),
        girth=gr,
    )


# ---------------------------------------------------------------- dense subgraphs


def find_complete_bipartite_subgraph(
    g: SimpleGraph, m: int, n: int, bounds: tuple[int, int] = DEFAULT_BIPARTITE_BOUNDS
) -> tuple[list[int], list[int]] | None:
    """Disjoint ``A``, ``B`` with ``|A| = min(m, n)``, ``|B| = max(m, n)`` and all A-B pairs adjacent."""
    a, b = sorted((m, n))
    if a > bounds[0] or b > bounds[1]:
        raise SearchBoundError(f"K_{{{a},{b}}} exceeds search bounds {bounds}")
    if a == 0:
        return ([], list(range(b))) if b <= g.n else None
    cands = [v for v in range(g.n) if g.adj[v].bit_count() >= b]
    chosen: list[int] = []

    def extend(start: int, common: int) -> int | None:
        if len(chosen) == a:
            return common
        for i in range(start, len(cands)):
            if len(cands) - i < a - len(chosen):
                return None
            v = cands[i]
            nc = common & g.adj[v]
            if nc.bit_count() < b:
                continue
            chosen.append(v)
            hit = extend(i + 1, nc)
            if hit is not None:
                return hit
            chosen.pop()
        return None

    hit = extend(0, (1 << g.n) - 1)
    if hit is None:
        return None
    return list(chosen), list(iter_bits(hit))[:b]


def contains_complete_bipartite_subgraph(
    g: SimpleGraph, m: int, n: int, bounds: tuple[int, int] = DEFAULT_BIPARTITE_BOUNDS
) -> bool:
    return find_complete_bipartite_subgraph(g, m, n, bounds) is not None


def find_clique(g: SimpleGraph, k: int) -> list[int] | None:
    cands = [v for v in range(g.n) if g.adj[v].bit_count() >= k - 1]
    chosen: list[int] = []

    def extend(pool: int) -> bool:
        if len(chosen) == k:
            return True
        if pool.bit_count() < k - len(chosen):
            return False
        for v in iter_bits(pool):
            chosen.append(v)
            if extend(pool & g.adj[v] & ~((1 << (v + 1)) - 1)):
                return True
            chosen.pop()
        return False

    pool = 0
    for v in cands:
        pool |= 1 << v
    return chosen if extend(pool) else None


def recognize_complete_multipartite(g: SimpleGraph) -> list[int] | None:
    """Sorted part sizes if ``g`` is complete multipartite, else None.

    ``g`` is complete multipartite exactly when its complement is a disjoint
    union of cliques; those cliques are the parts.
    """
    comp = g.complement()
    parts = []
    for c in components(comp):
        sub = 0
        for v in c:
            sub |= 1 << v
        for v in c:
            if comp.adj[v] != sub & ~(1 << v):
                return None
        parts.append(len(c))
    return sorted(parts)


def complete_multipartite(sizes: list[int]) -> SimpleGraph:
    n = sum(sizes)
    part = []
    for i, s in enumerate(sizes):
        part += [i] * s
    return SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]])
