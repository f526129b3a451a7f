"""Embedding schemes (rotation systems with edge signatures) and face tracing."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import SimpleGraph


class MalformedScheme(ValueError):
    pass


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass
class EmbeddingScheme:
    """Rotation at every non-isolated vertex plus a sign per edge.

    ``rotations[v]`` lists the neighbours of ``v`` in cyclic order.  ``signs``
    maps ``(min(u, v), max(u, v))`` to +1 or -1; missing edges count as +1.
    """

    rotations: dict[int, list[int]]
    signs: dict[tuple[int, int], int] = field(default_factory=dict)

    def sign(self, u: int, v: int) -> int:
        return self.signs.get(_edge_key(u, v), 1)

    def edges(self) -> list[tuple[int, int]]:
        return sorted({_edge_key(u, v) for u, rot in self.rotations.items() for v in rot})

    def negative_edges(self) -> list[tuple[int, int]]:
        return [e for e in self.edges() if self.sign(*e) < 0]

    def validate(self, graph: SimpleGraph | None = None) -> None:
        for u, rot in self.rotations.items():
            if len(set(rot)) != len(rot):
                raise MalformedScheme(f"rotation at {u} repeats a neighbour")
            for v in rot:
                if v == u:
                    raise MalformedScheme(f"loop at {u}")
                if u not in self.rotations.get(v, ()):
                    raise MalformedScheme(f"edge {u}-{v} missing from the rotation at {v}")
        for (u, v), s in self.signs.items():
            if s not in (1, -1):
                raise MalformedScheme(f"edge {u}-{v} has signature {s}")
            if v not in self.rotations.get(u, ()):
                raise MalformedScheme(f"signature given for non-edge {u}-{v}")
        if graph is not None:
            for v in range(graph.n):
                if set(self.rotations.get(v, ())) != set(graph.neighbors(v)):
                    raise MalformedScheme(f"rotation at {v} does not match the graph's neighbourhood")

    def is_orientable(self) -> bool:
        """True iff vertex switches can make every signature +1."""
        side: dict[int, int] = {}
        for root in self.rotations:
            if root in side:
                continue
            side[root] = 1
            stack = [root]
            while stack:
                u = stack.pop()
                for v in self.rotations[u]:
                    want = side[u] * self.sign(u, v)
                    if v not in side:
                        side[v] = want
                        stack.append(v)
                    elif side[v] != want:
                        return False
        return True

    def to_json(self) -> dict:
        return {
            "rotations": {str(v): list(rot) for v, rot in sorted(self.rotations.items())},
            "negative_edges": [list(e) for e in self.negative_edges()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "EmbeddingScheme":
        rot = {int(v): list(r) for v, r in data["rotations"].items()}
        signs = {_edge_key(u, v): -1 for u, v in data.get("negative_edges", [])}
        return cls(rot, signs)


@dataclass(frozen=True)
class FaceTrace:
    faces: list[list[tuple[int, int]]]  # each face as a closed walk of directed edges
    vertices: int
    edges: int
    components: int
    orientable: bool

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def euler_genus(self) -> int:
        return 2 * self.components - self.vertices + self.edges - self.face_count

    @property
    def genus(self) -> int | None:
        """Orientable genus of the surface, or None if non-orientable."""
        return self.euler_genus // 2 if self.orientable else None

    @property
    def crosscaps(self) -> int | None:
        return None if self.orientable else self.euler_genus

    def face_lengths(self) -> list[int]:
        return [len(f) for f in self.faces]


def face_trace(scheme: EmbeddingScheme) -> FaceTrace:
    """Trace every face of ``scheme``.

    A walk arriving at ``w`` along ``v -> w`` continues with the rotation
    successor of ``v`` at ``w``, or the predecessor when the walk's local
    orientation is reversed; crossing a negative edge flips that orientation.
    Each face is found twice (once per direction) and reported once.
    """
    scheme.validate()
    rot = scheme.rotations
    pos = {u: {v: i for i, v in enumerate(r)} for u, r in rot.items()}

    def step(u: int, v: int, o: int) -> tuple[int, int, int]:
        o2 = o * scheme.sign(u, v)
        r = rot[v]
        i = pos[v][u]
        w = r[(i + 1) % len(r)] if o2 > 0 else r[(i - 1) % len(r)]
        return v, w, o2

    seen: set[tuple[int, int, int]] = set()
    faces = []
    for u in sorted(rot):
        if not rot[u]:
            faces.append([])  # an isolated vertex sits inside a face of its own
        for v in rot[u]:
            for o in (1, -1):
                if (u, v, o) in seen:
                    continue
                walk = []
                state = (u, v, o)
                while state not in seen:
                    seen.add(state)
                    walk.append(state)
                    state = step(*state)
                if state != (u, v, o):
                    raise MalformedScheme("face tracing did not close into an orbit")
                # the same face traversed backwards
                back = [(b, a, -oo * scheme.sign(a, b)) for a, b, oo in walk]
                for st in back:
                    if st in seen:
                        raise MalformedScheme("face orbit overlaps its own reverse")
                    seen.add(st)
                faces.append([(a, b) for a, b, _ in walk])

    n = len(rot)
    m = len(scheme.edges())
    comps = _count_components(rot)
    darts = sum(len(f) for f in faces)
    if darts != 2 * m:
        raise MalformedScheme(f"faces cover {darts} edge sides, expected {2 * m}")
    return FaceTrace(faces, n, m, comps, scheme.is_orientable())


def _count_components(rot: dict[int, list[int]]) -> int:
    seen: set[int] = set()
    count = 0
    for root in rot:
        if root in seen:
            continue
        count += 1
        stack = [root]
        seen.add(root)
        while stack:
            u = stack.pop()
            for v in rot[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return count
