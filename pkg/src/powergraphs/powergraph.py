"""Power graphs of a finite group and the complement of the proper power graph."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import SimpleGraph, iter_bits, mask_of
from .groups import FiniteGroup


class EmptyGraphError(ValueError):
    """Raised for the trivial group, whose proper power graph has no vertices."""


@dataclass(frozen=True)
class DirectedPowerGraph:
    """Arc ``u -> v`` whenever ``v`` is a power of ``u`` and ``v != u``.

    ``out_masks[u]`` is a bitmask over all group elements, identity included.
    """

    n: int
    out_masks: tuple[int, ...]
    element_orders: tuple[int, ...]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.out_masks[u])]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_masks[u] >> v & 1)


def _subgroup_masks(g: FiniteGroup) -> list[int]:
    return [mask_of(g.cyclic_subgroup(x)) for x in range(g.order)]


def directed_power_graph(g: FiniteGroup) -> DirectedPowerGraph:
    masks = _subgroup_masks(g)
    out = tuple(m & ~(1 << u) for u, m in enumerate(masks))
    return DirectedPowerGraph(g.order, out, tuple(g.element_orders()))


def power_graph(g: FiniteGroup) -> SimpleGraph:
    """Undirected power graph on all elements (identity included)."""
    masks = _subgroup_masks(g)
    n = g.order
    adj = [0] * n
    for u in range(n):
        for v in iter_bits(masks[u]):
            if v != u:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return SimpleGraph.from_masks(adj, element_ids=list(range(n)), element_orders=g.element_orders())


def _proper_masks(g: FiniteGroup) -> list[int]:
    """Power-relation masks restricted to non-identity elements, renumbered ``x -> x - 1``."""
    if g.order < 2:
        raise EmptyGraphError("the trivial group has no non-identity elements")
    # identity is index 0, so dropping bit 0 and shifting renumbers x -> x-1
    return [m >> 1 for m in _subgroup_masks(g)[1:]]


def proper_power_graph(g: FiniteGroup) -> SimpleGraph:
    sub = _proper_masks(g)
    n = len(sub)
    adj = [0] * n
    for u in range(n):
        for v in iter_bits(sub[u]):
            if v != u:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return SimpleGraph.from_masks(
        adj, element_ids=list(range(1, g.order)), element_orders=g.element_orders()[1:]
    )


def complement_proper_power_graph(g: FiniteGroup) -> SimpleGraph:
    """Vertices are the non-identity elements; ``u ~ v`` iff neither lies in the other's cyclic subgroup."""
    sub = _proper_masks(g)
    n = len(sub)
    full = (1 << n) - 1
    # bit v of related[u] is set iff v in <u> or u in <v>
    related = list(sub)
    for u in range(n):
        for v in iter_bits(sub[u]):
            related[v] |= 1 << u
    adj = [full & ~related[u] & ~(1 << u) for u in range(n)]
    return SimpleGraph.from_masks(
        adj,
        element_ids=list(range(1, g.order)),
        element_orders=g.element_orders()[1:],
        name="",
    )
