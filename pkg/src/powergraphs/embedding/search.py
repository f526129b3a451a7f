"""Branch-and-bound search for low-genus embeddings of a connected graph.

The search builds a rotation system edge by edge.  Inserting an edge between
two corners changes the Euler genus of the partial embedding by

* 0 when both corners lie on one face and the edge splits it,
* 1 when both corners lie on one face but the edge is twisted relative to
  the face (signed schemes only),
* 2 when the corners lie on different faces, which merge.

Every rotation system (with signatures, spanning-tree edges fixed positive)
arises from exactly one sequence of insertions, so bounding the running
Euler genus by the target prunes exactly the schemes that cannot reach it.

Faces are tracked as orbits of states ``2 * dart + o`` where ``o`` is 1 when
the walk runs against the local rotation.  Each face of a signed scheme is
two orbits (one per direction); orientable searches only track ``o == 0``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .scheme import EmbeddingScheme


class Exhausted(Exception):
    pass


@dataclass
class SearchStats:
    nodes: int = 0
    elapsed: float = 0.0
    exhausted: bool = False


def _placement_order(n: int, nbrs: list[list[int]]) -> list[int]:
    """Maximum-cardinality order: close cycles as early as possible."""
    start = max(range(n), key=lambda v: (len(nbrs[v]), -v))
    order = [start]
    placed = [False] * n
    placed[start] = True
    weight = [0] * n
    for w in nbrs[start]:
        weight[w] += 1
    for _ in range(n - 1):
        v = max((x for x in range(n) if not placed[x]), key=lambda x: (weight[x], len(nbrs[x]), -x))
        order.append(v)
        placed[v] = True
        for w in nbrs[v]:
            weight[w] += 1
    return order


class EmbeddingSearch:
    """Decide whether a connected simple graph has a scheme of Euler genus <= ``eg_max``.

    ``signed=False`` searches orientable rotation systems only (so the result
    has genus ``eg // 2``).  With ``signed=True`` a leaf is accepted only if
    its surface is non-orientable or the sphere.
    """

    def __init__(
        self,
        n: int,
        edges: list[tuple[int, int]],
        eg_max: int,
        signed: bool,
        node_limit: int | None = None,
        time_limit: float | None = None,
    ):
        self.n = n
        self.eg_max = eg_max
        self.signed = signed
        self.node_limit = node_limit
        self.time_limit = time_limit
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.nbrs = nbrs
        self._plan(edges)

    # ------------------------------------------------------------ set-up

    def _plan(self, edges: list[tuple[int, int]]) -> None:
        n, nbrs = self.n, self.nbrs
        order = _placement_order(n, nbrs)
        rank = {v: i for i, v in enumerate(order)}
        plan: list[tuple[int, int, bool]] = []  # (placed endpoint, other endpoint, tree edge)
        for v in order[1:]:
            earlier = sorted((w for w in nbrs[v] if rank[w] < rank[v]), key=rank.__getitem__)
            plan.append((earlier[0], v, True))
            for w in earlier[1:]:
                plan.append((w, v, False))
        self.plan = plan
        self.order = order

        # the first vertex to receive a third edge has its orientation fixed (mirror symmetry)
        deg = [0] * n
        self.mirror_vertex = -1
        for u, v, _ in plan:
            for x in (u, v):
                deg[x] += 1
                if deg[x] == 3 and self.mirror_vertex < 0:
                    self.mirror_vertex = x

        # cofaciality constraints valid after k insertions
        placed_mask = 1 << order[0]
        constraints: list[list[int]] = []
        for k in range(len(plan) + 1):
            if k > 0:
                placed_mask |= 1 << plan[k - 1][1]
            cons = set()
            for j in range(k, len(plan)):
                u, v, tree = plan[j]
                if not tree and (placed_mask >> v & 1):
                    cons.add((1 << u) | (1 << v))
            for v in range(n):
                if placed_mask >> v & 1:
                    continue
                pm = 0
                for w in nbrs[v]:
                    if placed_mask >> w & 1:
                        pm |= 1 << w
                if pm.bit_count() >= 2:
                    cons.add(pm)
            # drop constraints implied by a superset
            ordered = sorted(cons, key=lambda c: -c.bit_count())
            kept: list[int] = []
            for c in ordered:
                if not any(c & d == c for d in kept):
                    kept.append(c)
            constraints.append(kept)
        self.constraints = constraints

    # ------------------------------------------------------------ search

    def run(self) -> EmbeddingScheme | None:
        """Return a witness scheme, or None when none exists.  Raises :class:`Exhausted`."""
        m = len(self.plan)
        self.stats = SearchStats()
        self._t0 = time.monotonic()
        if m == 0:
            return EmbeddingScheme({v: [] for v in range(self.n)} if self.n > 1 else {})
        ndarts = 2 * m
        self.tail = [0] * ndarts
        for e, (u, v, _) in enumerate(self.plan):
            self.tail[2 * e] = u
            self.tail[2 * e + 1] = v
        self.nxt = [-1] * ndarts
        self.prv = [-1] * ndarts
        self.neg = [False] * m
        self.first_dart = [-1] * self.n
        self.deg = [0] * self.n
        self.orb = [-1] * (2 * ndarts)
        self.live: dict[int, int] = {}  # orbit id -> vertex mask
        self.next_id = 0
        self.neg_count = 0
        try:
            found = self._descend(0, 0)
        except Exhausted:
            self.stats.exhausted = True
            raise
        finally:
            self.stats.elapsed = time.monotonic() - self._t0
        return self._witness() if found else None

    def _tick(self) -> None:
        st = self.stats
        st.nodes += 1
        if self.node_limit is not None and st.nodes > self.node_limit:
            raise Exhausted("node budget")
        if self.time_limit is not None and st.nodes & 1023 == 0:
            if time.monotonic() - self._t0 > self.time_limit:
                raise Exhausted("time budget")

    def _step(self, s: int) -> int:
        d = s >> 1
        b = s & 1
        r = d ^ 1
        if self.neg[d >> 1]:
            b ^= 1
        nd = self.prv[r] if b else self.nxt[r]
        return 2 * nd + b

    def _corners(self, v: int) -> list[int]:
        d0 = self.first_dart[v]
        if d0 < 0:
            return [-1]
        if v == self.mirror_vertex and self.deg[v] == 2:
            return [d0]
        out = [d0]
        d = self.nxt[d0]
        while d != d0:
            out.append(d)
            d = self.nxt[d]
        return out

    def _options(self, k: int, eg: int) -> list[tuple[int, int, int, int]]:
        """``(eg_delta, corner_u, corner_v, negative)`` choices for plan edge ``k``."""
        u, v, tree = self.plan[k]
        if tree:
            return [(0, a, -1, 0) for a in self._corners(u)]
        budget = self.eg_max - eg
        orb, nxt = self.orb, self.nxt
        splits, twists, merges = [], [], []
        cu = self._corners(u)
        cv = self._corners(v)
        for a in cu:
            fa = orb[2 * nxt[a]]
            for c in cv:
                fc = orb[2 * nxt[c]]
                if fa == fc:
                    splits.append((0, a, c, 0))
                    if self.signed and budget >= 1:
                        twists.append((1, a, c, 1))
                elif self.signed and fa == orb[2 * c + 1]:
                    # same face, walked through the two corners in opposite senses
                    splits.append((0, a, c, 1))
                    if budget >= 1:
                        twists.append((1, a, c, 0))
                elif budget >= 2:
                    merges.append((2, a, c, 0))
                    if self.signed:
                        merges.append((2, a, c, 1))
        return splits + twists + merges

    def _feasible(self, k: int, eg: int) -> bool:
        if self.eg_max - eg >= 2:
            return True
        faces = list(self.live.values())
        for c in self.constraints[k]:
            for f in faces:
                if f & c == c:
                    break
            else:
                return False
        return True

    def _descend(self, k: int, eg: int) -> bool:
        self._tick()
        if k == len(self.plan):
            return not self.signed or eg == 0 or self.neg_count > 0
        if not self._feasible(k, eg):
            return False
        for delta, a, c, negative in self._options(k, eg):
            if eg + delta > self.eg_max:
                continue
            undo = self._insert(k, a, c, negative)
            if self._descend(k + 1, eg + delta):
                return True
            self._remove(k, a, c, negative, undo)
        return False

    # ------------------------------------------------------------ incremental faces

    def _orbit_states(self, s: int) -> list[int]:
        out = [s]
        t = self._step(s)
        while t != s:
            out.append(t)
            t = self._step(t)
        return out

    def _insert(self, k: int, a: int, c: int, negative: int):
        signed = self.signed
        orb = self.orb
        x, y = 2 * k, 2 * k + 1
        u, v, _ = self.plan[k]

        # states of the faces about to change
        touched_ids = []
        seeds = []
        for corner in (a, c):
            if corner < 0:
                continue
            for s in ((2 * self.nxt[corner], 2 * corner + 1) if signed else (2 * self.nxt[corner],)):
                oid = orb[s]
                if oid not in touched_ids:
                    touched_ids.append(oid)
                    seeds.append(s)
        old_states = []
        for s in seeds:
            old_states.extend(self._orbit_states(s))

        # splice the new darts into the rotations
        for dart, corner, w in ((x, a, u), (y, c, v)):
            if corner < 0:
                self.nxt[dart] = self.prv[dart] = dart
                self.first_dart[w] = dart
            else:
                after = self.nxt[corner]
                self.nxt[corner] = dart
                self.prv[dart] = corner
                self.nxt[dart] = after
                self.prv[after] = dart
            self.deg[w] += 1
        if negative:
            self.neg[k] = True
            self.neg_count += 1

        removed = [(oid, self.live.pop(oid)) for oid in touched_ids]
        saved = [(s, orb[s]) for s in old_states]
        for s in old_states:
            orb[s] = -1
        fresh = [2 * x, 2 * y, 2 * x + 1, 2 * y + 1] if signed else [2 * x, 2 * y]
        new_ids = []
        tail = self.tail
        for s0 in old_states + fresh:
            if orb[s0] >= 0:
                continue
            oid = self.next_id
            self.next_id += 1
            mask = 0
            s = s0
            while orb[s] < 0:
                orb[s] = oid
                mask |= 1 << tail[s >> 1]
                s = self._step(s)
            self.live[oid] = mask
            new_ids.append(oid)
        return removed, saved, new_ids

    def _remove(self, k: int, a: int, c: int, negative: int, undo) -> None:
        removed, saved, new_ids = undo
        x, y = 2 * k, 2 * k + 1
        u, v, _ = self.plan[k]
        for oid in new_ids:
            del self.live[oid]
        self.next_id -= len(new_ids)
        for oid, mask in removed:
            self.live[oid] = mask
        for s, oid in saved:
            self.orb[s] = oid
        for s in (2 * x, 2 * y, 2 * x + 1, 2 * y + 1):
            self.orb[s] = -1
        for dart, corner, w in ((y, c, v), (x, a, u)):
            if corner < 0:
                self.first_dart[w] = -1
            else:
                after = self.nxt[dart]
                self.nxt[corner] = after
                self.prv[after] = corner
            self.nxt[dart] = self.prv[dart] = -1
            self.deg[w] -= 1
        if negative:
            self.neg[k] = False
            self.neg_count -= 1

    def _witness(self) -> EmbeddingScheme:
        rotations: dict[int, list[int]] = {}
        for v in range(self.n):
            d0 = self.first_dart[v]
            rot = []
            d = d0
            while True:
                rot.append(self.tail[d ^ 1])
                d = self.nxt[d]
                if d == d0:
                    break
            rotations[v] = rot
        signs = {}
        for k, (u, v, _) in enumerate(self.plan):
            if self.neg[k]:
                signs[(min(u, v), max(u, v))] = -1
        return EmbeddingScheme(rotations, signs)
