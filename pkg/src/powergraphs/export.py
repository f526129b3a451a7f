"""Graph export and import: graph6 (short form), DOT and a small JSON schema."""

from __future__ import annotations

import json

from .graph import SimpleGraph

GRAPH6_MAX_VERTICES = 62
FORMATS = ("graph6", "dot", "json")


class ExportError(ValueError):
    pass


def to_graph6(g: SimpleGraph) -> str:
    """Header-free graph6 for ``n <= 62``: one size byte, then the upper triangle column by column."""
    n = g.n
    if n > GRAPH6_MAX_VERTICES:
        raise ExportError(f"graph6 short form holds at most {GRAPH6_MAX_VERTICES} vertices, got {n}")
    bits = [int(g.has_edge(i, j)) for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return "".join(chars)


def from_graph6(text: str) -> SimpleGraph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<") :]
    if not text or not 63 <= ord(text[0]) <= 63 + GRAPH6_MAX_VERTICES:
        raise ExportError("graph6 input must start with a short-form size byte")
    n = ord(text[0]) - 63
    need = (n * (n - 1) // 2 + 5) // 6
    body = text[1:]
    if len(body) != need:
        raise ExportError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for ch in body:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise ExportError(f"invalid graph6 byte {ch!r}")
        bits += [(v >> s) & 1 for s in range(5, -1, -1)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return SimpleGraph(n, edges)


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.element_orders is not None:
            lines.append(f'  {v} [label="{v} (o={g.element_orders[v]})", order={g.element_orders[v]}];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: SimpleGraph) -> str:
    orders = g.element_orders
    doc = {
        "vertices": [{"id": v, "element_order": orders[v] if orders is not None else None} for v in range(g.n)],
        "edges": [[u, v] for u, v in g.edges()],
    }
    return json.dumps(doc, indent=None, separators=(",", ":"))


def from_json(text: str) -> SimpleGraph:
    doc = json.loads(text)
    ids = [v["id"] for v in doc["vertices"]]
    if ids != list(range(len(ids))):
        raise ExportError("vertex ids must be 0..n-1 in order")
    orders = [v.get("element_order") for v in doc["vertices"]]
    return SimpleGraph(
        len(ids),
        [tuple(e) for e in doc["edges"]],
        element_orders=None if any(o is None for o in orders) else orders,
    )


def export_graph(g: SimpleGraph, fmt: str) -> bytes:
    if fmt == "graph6":
        return (to_graph6(g) + "\n").encode()
    if fmt == "dot":
        return to_dot(g).encode()
    if fmt == "json":
        return (to_json(g) + "\n").encode()
    raise ExportError(f"unknown format {fmt!r}; choose one of {', '.join(FORMATS)}")
