"""Undirected simple graphs stored as adjacency bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class SimpleGraph:
    """Undirected simple graph on vertices ``0 .. n-1``.

    ``adj[v]`` is an int bitmask of the neighbours of ``v``.  Group-derived
    graphs also carry, per vertex, the source element index and its order.
    """

    __slots__ = ("n", "adj", "element_ids", "element_orders", "name")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        element_ids: Sequence[int] | None = None,
        element_orders: Sequence[int] | None = None,
        name: str = "",
    ):
        self.n = n
        self.adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u
        self.element_ids = list(element_ids) if element_ids is not None else None
        self.element_orders = list(element_orders) if element_orders is not None else None
        self.name = name

    @classmethod
    def from_masks(cls, masks: Sequence[int], **labels) -> "SimpleGraph":
        g = cls(len(masks), **labels)
        g.adj = list(masks)
        return g

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls.from_masks([full & ~(1 << v) for v in range(n)], name=f"K{n}")

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, name=f"E{n}")

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<SimpleGraph{tag} n={self.n} m={self.num_edges()}>"

    def __eq__(self, other) -> bool:
        return isinstance(other, SimpleGraph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, tuple(self.adj)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        return SimpleGraph.from_masks(
            [full & ~m & ~(1 << v) for v, m in enumerate(self.adj)],
            element_ids=self.element_ids,
            element_orders=self.element_orders,
        )

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        pos = {v: i for i, v in enumerate(vertices)}
        edges = [(pos[u], pos[w]) for u in vertices for w in iter_bits(self.adj[u]) if w in pos and pos[u] < pos[w]]
        return SimpleGraph(
            len(vertices),
            edges,
            element_ids=[self.element_ids[v] for v in vertices] if self.element_ids else None,
            element_orders=[self.element_orders[v] for v in vertices] if self.element_orders else None,
        )

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def without_isolated(self) -> tuple["SimpleGraph", list[int]]:
        keep = [v for v in range(self.n) if self.adj[v]]
        return self.induced(keep), keep

    def disjoint_union(self, other: "SimpleGraph") -> "SimpleGraph":
        off = self.n
        return SimpleGraph(self.n + other.n, list(self.edges()) + [(u + off, v + off) for u, v in other.edges()])

    def join(self, other: "SimpleGraph") -> "SimpleGraph":
        g = self.disjoint_union(other)
        for u in range(self.n):
            for v in range(other.n):
                g.adj[u] |= 1 << (self.n + v)
                g.adj[self.n + v] |= 1 << u
        return g

    def add_apex(self) -> "SimpleGraph":
        """Copy of the graph with one extra vertex adjacent to every vertex."""
        n = self.n
        masks = [m | (1 << n) for m in self.adj]
        masks.append((1 << n) - 1)
        return SimpleGraph.from_masks(masks)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m
