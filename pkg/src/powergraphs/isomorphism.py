"""Exact isomorphism test for small graphs: colour refinement plus backtracking."""

from __future__ import annotations

from .analysis import SearchBoundError
from .graph import SimpleGraph, iter_bits

DEFAULT_MAX_VERTICES = 16


def _refine(graphs: list[SimpleGraph]) -> list[list[int]]:
    """Joint 1-dimensional Weisfeiler-Leman colouring; colours are comparable across graphs."""
    colors = [[g.degree(v) for v in range(g.n)] for g in graphs]
    n_classes = -1
    while True:
        sigs = [
            [(c[v], tuple(sorted(c[w] for w in iter_bits(g.adj[v])))) for v in range(g.n)]
            for g, c in zip(graphs, colors)
        ]
        palette = {s: i for i, s in enumerate(sorted({s for sg in sigs for s in sg}))}
        colors = [[palette[s] for s in sg] for sg in sigs]
        if len(palette) == n_classes:
            return colors
        n_classes = len(palette)


def find_isomorphism(
    g1: SimpleGraph, g2: SimpleGraph, max_vertices: int | None = DEFAULT_MAX_VERTICES
) -> list[int] | None:
    """A vertex map ``phi`` with ``u ~ v`` in g1 iff ``phi[u] ~ phi[v]`` in g2, or None."""
    if max_vertices is not None and max(g1.n, g2.n) > max_vertices:
        raise SearchBoundError(f"isomorphism test limited to {max_vertices} vertices")
    if g1.n != g2.n or g1.num_edges() != g2.num_edges():
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    c1, c2 = _refine([g1, g2])
    if sorted(c1) != sorted(c2):
        return None

    n = g1.n
    class_size: dict[int, int] = {}
    for c in c1:
        class_size[c] = class_size.get(c, 0) + 1
    # visit rare colours first, then grow along edges so constraints bite early
    order: list[int] = []
    placed = 0
    while len(order) < n:
        frontier = [v for v in range(n) if not placed >> v & 1 and g1.adj[v] & placed]
        pool = frontier or [v for v in range(n) if not placed >> v & 1]
        v = min(pool, key=lambda x: (class_size[c1[x]], -(g1.adj[x] & placed).bit_count(), x))
        order.append(v)
        placed |= 1 << v

    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(c2[w], []).append(w)
    phi = [-1] * n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        for w in by_color[c1[v]]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:k]:
                if g1.has_edge(u, v) != g2.has_edge(phi[u], w):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            used &= ~(1 << w)
            phi[v] = -1
        return False

    return phi if extend(0) else None


def is_isomorphic(g1: SimpleGraph, g2: SimpleGraph, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> bool:
    return find_isomorphism(g1, g2, max_vertices) is not None
