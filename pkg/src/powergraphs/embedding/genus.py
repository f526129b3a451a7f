"""Bounded genus decisions for orientable and non-orientable surfaces.

Both entry points reduce the input before searching: isolated vertices are
dropped, each connected component is handled separately, and vertices of
degree one are peeled off (they never change the genus and are put back into
the witness afterwards).  Euler genus is additive over components, so a
graph embeds with Euler genus at most ``k`` exactly when the per-component
minima sum to at most ``k``.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from enum import Enum

from ..analysis import components, contains_complete_bipartite_subgraph, find_clique, girth
from ..graph import SimpleGraph, iter_bits
from .scheme import EmbeddingScheme, face_trace
from .search import EmbeddingSearch, Exhausted

BUDGET_ENV = "POWERGRAPHS_BUDGET"
MAX_ORIENTABLE = 2
MAX_EULER = 2


class Decision(str, Enum):
    EMBEDDABLE = "embeddable"
    NOT_EMBEDDABLE = "not_embeddable"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class Budget:
    """Node and wall-clock limits shared by all searches of one decision."""

    nodes: int = 10**8
    seconds: float = 600.0

    @classmethod
    def from_env(cls) -> "Budget":
        """Defaults, overridden by ``POWERGRAPHS_BUDGET="<nodes>:<seconds>"``."""
        raw = os.environ.get(BUDGET_ENV)
        if not raw:
            return cls()
        try:
            nodes, seconds = raw.split(":")
            budget = cls(int(float(nodes)), float(seconds))
        except ValueError as exc:
            raise ValueError(f"{BUDGET_ENV} must look like '100000000:600', got {raw!r}") from exc
        if budget.nodes <= 0 or budget.seconds <= 0:
            raise ValueError(f"{BUDGET_ENV} limits must be positive")
        return budget


@dataclass
class GenusResult:
    decision: Decision
    orientable: bool  # which family of surfaces was queried
    bound: int  # gmax (handles) or kmax (Euler genus)
    witness: EmbeddingScheme | None = None
    face_count: int | None = None
    euler_genus: int | None = None  # of the witness
    nodes: int = 0
    elapsed: float = 0.0
    methods: list[str] = field(default_factory=list)

    @property
    def embeddable(self) -> bool | None:
        if self.decision is Decision.EXHAUSTED:
            return None
        return self.decision is Decision.EMBEDDABLE

    def as_dict(self) -> dict:
        return {
            "decision": self.decision.value,
            "orientable": self.orientable,
            "bound": self.bound,
            "face_count": self.face_count,
            "euler_genus": self.euler_genus,
            "nodes": self.nodes,
            "elapsed": self.elapsed,
            "methods": list(self.methods),
            "witness": self.witness.to_json() if self.witness else None,
        }


class _Clock:
    def __init__(self, budget: Budget):
        self.budget = budget
        self.start = time.monotonic()
        self.nodes = 0

    def limits(self) -> tuple[int, float]:
        return self.budget.nodes - self.nodes, self.budget.seconds - (time.monotonic() - self.start)

    def elapsed(self) -> float:
        return time.monotonic() - self.start


def _peel_leaves(sub: SimpleGraph) -> tuple[list[int], list[tuple[int, int]]]:
    """Repeatedly remove degree-1 vertices; return the core and the removed ``(leaf, anchor)`` pairs."""
    adj = list(sub.adj)
    alive = (1 << sub.n) - 1
    peeled = []
    stack = [v for v in range(sub.n) if adj[v].bit_count() == 1]
    while stack:
        v = stack.pop()
        if not alive >> v & 1 or adj[v].bit_count() != 1:
            continue
        w = adj[v].bit_length() - 1
        peeled.append((v, w))
        alive &= ~(1 << v)
        adj[w] &= ~(1 << v)
        adj[v] = 0
        if adj[w].bit_count() == 1:
            stack.append(w)
    core = list(iter_bits(alive))
    return core, peeled


def _euler_lower_bound(core: SimpleGraph) -> int:
    """Faces have length at least the girth, so f <= 2m / girth."""
    n, m = core.n, core.num_edges()
    gr = girth(core)
    if gr == float("inf"):
        return 0
    return max(0, 2 - n + m - (2 * m) // int(gr))


def _has_kmn(g: SimpleGraph, a: int, b: int) -> bool:
    return contains_complete_bipartite_subgraph(g, a, b, bounds=(max(a, b), max(a, b)))


def _known_obstruction(core: SimpleGraph, level: int, orientable: bool) -> str | None:
    """A subgraph whose known genus already exceeds ``level``."""
    if level == 0:
        checks = [("K5", 5, None), ("K3,3", 3, 3)]
    elif orientable and level == 1:
        checks = [("K8", 8, None), ("K4,5", 4, 5), ("K3,7", 3, 7)]
    elif not orientable and level == 1:
        checks = [("K7", 7, None), ("K4,4", 4, 4), ("K3,5", 3, 5)]
    elif not orientable and level == 2:
        checks = [("K8", 8, None), ("K4,5", 4, 5), ("K3,7", 3, 7)]
    else:
        return None
    for name, a, b in checks:
        if b is None:
            if find_clique(core, a) is not None:
                return name
        elif _has_kmn(core, a, b):
            return name
    return None


def _component_minimum(
    core: SimpleGraph, cap: int, orientable: bool, clock: _Clock, shortcuts: bool, methods: list[str]
) -> tuple[int | None, EmbeddingScheme | None]:
    """Smallest level <= cap (handles, or Euler genus) with an embedding; ``(None, None)`` if none.

    Raises :class:`Exhausted` when the budget runs out before a decision.
    """
    lb = _euler_lower_bound(core)
    edges = list(core.edges())
    for level in range(cap + 1):
        eg_max = 2 * level if orientable else level
        if shortcuts and lb > eg_max:
            methods.append(f"euler-bound>{eg_max}")
            continue
        if shortcuts:
            hit = _known_obstruction(core, level, orientable)
            if hit:
                methods.append(f"contains-{hit}")
                continue
        nodes, seconds = clock.limits()
        if nodes <= 0 or seconds <= 0:
            raise Exhausted("budget")
        search = EmbeddingSearch(core.n, edges, eg_max, signed=not orientable, node_limit=nodes, time_limit=seconds)
        try:
            found = search.run()
        finally:
            clock.nodes += search.stats.nodes
        methods.append(f"search(eg<={eg_max})")
        if found is not None:
            return level, found
    return None, None


def _decide(g: SimpleGraph, bound: int, orientable: bool, budget: Budget | None, shortcuts: bool) -> GenusResult:
    cap = MAX_ORIENTABLE if orientable else MAX_EULER
    if not 0 <= bound <= cap:
        raise ValueError(f"bound must lie in 0..{cap}, got {bound}")
    clock = _Clock(budget or Budget.from_env())
    result = GenusResult(Decision.EXHAUSTED, orientable, bound)
    rotations: dict[int, list[int]] = {v: [] for v in range(g.n)}
    signs: dict[tuple[int, int], int] = {}
    remaining = bound
    try:
        for comp in components(g):
            if len(comp) == 1:
                continue
            sub = g.induced(comp)
            core_local, peeled = _peel_leaves(sub)
            if len(core_local) == 1:
                # a tree
                rotations[comp[core_local[0]]] = []
            else:
                core = sub.induced(core_local)
                level, scheme = _component_minimum(
                    core, remaining, orientable, clock, shortcuts, result.methods
                )
                if level is None:
                    result.decision = Decision.NOT_EMBEDDABLE
                    return result
                remaining -= level
                for v, rot in scheme.rotations.items():
                    rotations[comp[core_local[v]]] = [comp[core_local[w]] for w in rot]
                for (u, v), s in scheme.signs.items():
                    a, b = comp[core_local[u]], comp[core_local[v]]
                    signs[(min(a, b), max(a, b))] = s
            for leaf, anchor in reversed(peeled):
                rotations[comp[leaf]] = [comp[anchor]]
                rotations[comp[anchor]].append(comp[leaf])
    except Exhausted:
        result.decision = Decision.EXHAUSTED
        return result
    finally:
        result.nodes = clock.nodes
        result.elapsed = clock.elapsed()

    witness = EmbeddingScheme(rotations, signs)
    trace = face_trace(witness)
    result.decision = Decision.EMBEDDABLE
    result.witness = witness
    result.face_count = trace.face_count
    result.euler_genus = trace.euler_genus
    return result


def orientable_genus_at_most(
    g: SimpleGraph, gmax: int, budget: Budget | None = None, shortcuts: bool = True
) -> GenusResult:
    """Does ``g`` embed on the orientable surface with ``gmax`` handles (``gmax <= 2``)?

    ``shortcuts=False`` disables the girth-based Euler bound and the test for
    subgraphs of known genus, so every answer comes from exhaustive search.
    """
    return _decide(g, gmax, True, budget, shortcuts)


def euler_genus_at_most(
    g: SimpleGraph, kmax: int, budget: Budget | None = None, shortcuts: bool = True
) -> GenusResult:
    """Does ``g`` embed on the sphere or a non-orientable surface with at most ``kmax`` crosscaps?

    ``kmax = 1`` is projective-planarity.
    """
    return _decide(g, kmax, False, budget, shortcuts)


def orientable_genus(g: SimpleGraph, budget: Budget | None = None) -> int | None:
    """Exact genus when it is at most 2; None if larger or undecided."""
    for h in range(MAX_ORIENTABLE + 1):
        r = orientable_genus_at_most(g, h, budget)
        if r.decision is Decision.EXHAUSTED:
            return None
        if r.embeddable:
            return h
    return None


def nonorientable_genus(g: SimpleGraph, budget: Budget | None = None) -> int | None:
    """Crosscap number when at most 2 (0 for planar graphs); None if larger or undecided."""
    for k in range(MAX_EULER + 1):
        r = euler_genus_at_most(g, k, budget)
        if r.decision is Decision.EXHAUSTED:
            return None
        if r.embeddable:
            return k
    return None


def is_toroidal(g: SimpleGraph, budget: Budget | None = None) -> bool | None:
    """Genus exactly 1.  None when a search ran out of budget."""
    zero = orientable_genus_at_most(g, 0, budget)
    if zero.embeddable is None:
        return None
    if zero.embeddable:
        return False
    return orientable_genus_at_most(g, 1, budget).embeddable


def is_projective(g: SimpleGraph, budget: Budget | None = None) -> bool | None:
    """Crosscap number exactly 1.  None when a search ran out of budget."""
    zero = euler_genus_at_most(g, 0, budget)
    if zero.embeddable is None:
        return None
    if zero.embeddable:
        return False
    return euler_genus_at_most(g, 1, budget).embeddable
