"""Planarity and outer-planarity, delegated to networkx's left-right planarity test."""

from __future__ import annotations

import networkx as nx

from ..graph import SimpleGraph


def is_planar(g: SimpleGraph) -> bool:
    planar, _ = nx.check_planarity(g.to_networkx())
    return planar


def kuratowski_subgraph(g: SimpleGraph) -> list[tuple[int, int]] | None:
    """Edges of a K_5 or K_{3,3} subdivision when ``g`` is non-planar, else None."""
    planar, cert = nx.check_planarity(g.to_networkx(), counterexample=True)
    if planar:
        return None
    return sorted((min(u, v), max(u, v)) for u, v in cert.edges())


def is_outerplanar(g: SimpleGraph) -> bool:
    """Outerplanar iff adding one vertex joined to everything keeps the graph planar."""
    return is_planar(g.add_apex())
