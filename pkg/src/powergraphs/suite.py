"""Computed-versus-predicted verification over a corpus of groups."""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Callable

from . import analysis as ga
from .embedding import Budget, is_outerplanar, is_planar, is_projective, is_toroidal
from .embedding.genus import euler_genus_at_most, orientable_genus_at_most
from .embedding.scheme import face_trace
from .fixtures import complete_bipartite, complete_graph, k333, k333_uu
from .graph import SimpleGraph
from .groups import GroupSpec, build_group
from .oracle import classification_oracle
from .powergraph import complement_proper_power_graph
from .specparse import parse_group_spec

SUITES = ("formulas", "structure", "classification", "topology", "fixtures", "all")

STRUCTURE = (
    "is_complete",
    "is_claw_free",
    "is_bipartite",
    "is_triangle_free",
    "component_count",
    "isolated_vertex_count",
    "diameter",
    "girth",
)
PLANARITY = ("is_planar", "is_outerplanar", "is_path", "is_star", "is_cycle", "k14_free", "k23_free")
TOPOLOGY = ("is_planar", "is_toroidal", "is_projective")

SUITE_PROPERTIES: dict[str, tuple[str, ...]] = {
    "formulas": ("component_count", "isolated_vertex_count"),
    "structure": STRUCTURE,
    "classification": STRUCTURE + PLANARITY,
    "topology": TOPOLOGY,
    "fixtures": (),
    "all": STRUCTURE + PLANARITY + ("is_toroidal", "is_projective"),
}

# status of one compared property
PASS, FAIL, SILENT, INCONCLUSIVE, ERROR = "pass", "fail", "silent", "inconclusive", "error"


def _jsonable(v: Any) -> Any:
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return v


def load_manifest(name_or_path: str) -> list[str]:
    """Specs from a manifest: a bundled name (``named``, ``cyclic``) or a file path."""
    if name_or_path in ("named", "cyclic"):
        text = resources.files("powergraphs.data").joinpath(f"{name_or_path}.txt").read_text()
    else:
        with open(name_or_path, encoding="utf-8") as fh:
            text = fh.read()
    specs = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            specs.append(line)
    return specs


def default_corpus(suite: str, max_order: int | None = None) -> list[str]:
    if suite == "fixtures":
        return []
    if suite == "formulas":
        specs = load_manifest("cyclic")
    elif suite == "all":
        specs = list(dict.fromkeys(load_manifest("named") + load_manifest("cyclic")))
    else:
        specs = load_manifest("named")
    if max_order is not None:
        specs = [s for s in specs if _order_or_none(s) is None or _order_or_none(s) <= max_order]
    return specs


def _order_or_none(text: str) -> int | None:
    try:
        return parse_group_spec(text).order()
    except Exception:
        return None  # permutation groups only know their order after closure


@dataclass
class PropertyCheck:
    name: str
    computed: Any
    predicted: Any
    status: str
    elapsed: float = 0.0

    def as_dict(self, timing: bool = True) -> dict:
        d = {
            "property": self.name,
            "computed": _jsonable(self.computed),
            "predicted": _jsonable(self.predicted),
            "status": self.status,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d


@dataclass
class Entry:
    """One corpus group or fixture with its checked properties."""

    label: str
    order: int | None = None
    identified_as: str | None = None
    checks: list[PropertyCheck] = field(default_factory=list)
    error: str | None = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.status in (PASS, SILENT) for c in self.checks)

    def as_dict(self, timing: bool = True) -> dict:
        d = {
            "label": self.label,
            "order": self.order,
            "identified_as": self.identified_as,
            "passed": self.passed,
            "error": self.error,
            "checks": [c.as_dict(timing) for c in self.checks],
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d


@dataclass
class VerificationReport:
    suite: str
    entries: list[Entry]
    budget: Budget

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def summary(self) -> dict:
        counts = {s: 0 for s in (PASS, FAIL, SILENT, INCONCLUSIVE, ERROR)}
        for e in self.entries:
            if e.error:
                counts[ERROR] += 1
            for c in e.checks:
                counts[c.status] += 1
        return {
            "entries": len(self.entries),
            "failed_entries": sum(not e.passed for e in self.entries),
            "checks": counts,
            "passed": self.passed,
        }

    def failures(self) -> list[tuple[str, PropertyCheck | str]]:
        out: list[tuple[str, PropertyCheck | str]] = []
        for e in self.entries:
            if e.error:
                out.append((e.label, e.error))
            out += [(e.label, c) for c in e.checks if c.status not in (PASS, SILENT)]
        return out

    def as_dict(self, timing: bool = True) -> dict:
        return {
            "suite": self.suite,
            "summary": self.summary(),
            "engine": {
                "node_budget": self.budget.nodes,
                "time_budget_seconds": self.budget.seconds,
                "note": "budget-exhausted searches are reported as 'inconclusive' and never counted as 'no'",
            },
            "entries": [e.as_dict(timing) for e in self.entries],
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.as_dict(timing), indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------- computing properties


def compute_property(name: str, g: SimpleGraph, budget: Budget) -> Any:
    """Value of one property of the complement graph; None when a search ran out of budget."""
    simple: dict[str, Callable[[SimpleGraph], Any]] = {
        "is_complete": ga.is_complete,
        "is_claw_free": ga.is_claw_free,
        "is_bipartite": ga.is_bipartite,
        "is_triangle_free": ga.is_triangle_free,
        "component_count": ga.component_count,
        "isolated_vertex_count": lambda h: len(h.isolated_vertices()),
        "diameter": ga.diameter,
        "girth": ga.girth,
        "is_planar": is_planar,
        "is_outerplanar": is_outerplanar,
        "is_path": ga.is_path,
        "is_star": ga.is_star,
        "is_cycle": ga.is_cycle,
        "k14_free": lambda h: not ga.contains_complete_bipartite_subgraph(h, 1, 4),
        "k23_free": lambda h: not ga.contains_complete_bipartite_subgraph(h, 2, 3),
    }
    if name in simple:
        return simple[name](g)
    if name == "is_toroidal":
        return is_toroidal(g, budget)
    if name == "is_projective":
        return is_projective(g, budget)
    raise KeyError(name)


def _compare(name: str, computed: Any, predicted: Any, elapsed: float) -> PropertyCheck:
    if predicted is None:
        status = SILENT
    elif computed is None:
        status = INCONCLUSIVE
    else:
        status = PASS if computed == predicted else FAIL
    return PropertyCheck(name, computed, predicted, status, elapsed)


def verify_group(text: str, properties: tuple[str, ...], budget: Budget) -> Entry:
    t0 = time.monotonic()
    entry = Entry(text)
    try:
        spec: GroupSpec = parse_group_spec(text)
        group = build_group(spec)
        entry.order = group.order
        g = complement_proper_power_graph(group)
        pred = classification_oracle(spec, group)
        entry.identified_as = pred.identified_as
        for name in properties:
            t1 = time.monotonic()
            value = compute_property(name, g, budget)
            entry.checks.append(_compare(name, value, getattr(pred, name), time.monotonic() - t1))
    except Exception as exc:  # a bad entry is recorded and the suite continues
        entry.error = f"{type(exc).__name__}: {exc}"
    entry.elapsed = time.monotonic() - t0
    return entry


# ---------------------------------------------------------------- fixtures


def _check(entry: Entry, name: str, computed: Any, predicted: Any, t0: float) -> None:
    entry.checks.append(_compare(name, computed, predicted, time.monotonic() - t0))


def _genus_formula_entries(budget: Budget) -> list[Entry]:
    out = []
    cases: list[tuple[str, SimpleGraph, int, int | None]] = []
    for n in range(3, 8):
        gamma = math.ceil((n - 3) * (n - 4) / 12)
        crosscap = 3 if n == 7 else math.ceil((n - 3) * (n - 4) / 6)
        cases.append((f"K{n}", complete_graph(n), gamma, crosscap))
    for m, n in [(3, 3), (3, 4), (4, 4), (3, 5)]:
        gamma = math.ceil((m - 2) * (n - 2) / 4)
        crosscap = math.ceil((m - 2) * (n - 2) / 2)
        cases.append((f"K{m},{n}", complete_bipartite(m, n), gamma, crosscap))
    for label, g, gamma, crosscap in cases:
        e = Entry(label)
        t0 = time.monotonic()
        for h in range(0, 2):
            t = time.monotonic()
            r = orientable_genus_at_most(g, h, budget, shortcuts=False)
            _check(e, f"genus<={h}", r.embeddable, gamma <= h, t)
        for k in range(0, 2):
            t = time.monotonic()
            r = euler_genus_at_most(g, k, budget, shortcuts=False)
            _check(e, f"crosscaps<={k}", r.embeddable, crosscap <= k, t)
        e.elapsed = time.monotonic() - t0
        out.append(e)
    return out


def fixture_entries(budget: Budget) -> list[Entry]:
    entries = []

    e = Entry("K3,3,3")
    t0 = time.monotonic()
    r = orientable_genus_at_most(k333(), 1, budget)
    _check(e, "toroidal", r.embeddable, True, t0)
    if r.witness is not None:
        tr = face_trace(r.witness)
        _check(e, "face_count", tr.face_count, 18, t0)
        _check(e, "all_faces_triangles", all(x == 3 for x in tr.face_lengths()), True, t0)
    e.elapsed = time.monotonic() - t0
    entries.append(e)

    e = Entry("K3,3,3^uu'")
    t0 = time.monotonic()
    r = orientable_genus_at_most(k333_uu(), 1, budget, shortcuts=False)
    _check(e, "toroidal", r.embeddable, False, t0)
    e.elapsed = time.monotonic() - t0
    entries.append(e)

    entries += _genus_formula_entries(budget)
    return entries


# ---------------------------------------------------------------- driver


def _verify_star(args: tuple[str, tuple[str, ...], Budget]) -> Entry:
    return verify_group(*args)


def run_suite(
    corpus: list[str] | None,
    suite: str = "all",
    budget: Budget | None = None,
    max_order: int | None = None,
    workers: int = 1,
) -> VerificationReport:
    """Verify ``corpus`` (spec strings; None means the bundled default) under ``suite``.

    Entries keep corpus order whatever the worker count.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose one of {', '.join(SUITES)}")
    budget = budget or Budget.from_env()
    if budget.nodes <= 0 or budget.seconds <= 0:
        raise ValueError("budgets must be positive")
    if corpus is None:
        corpus = default_corpus(suite, max_order)
    elif max_order is not None:
        corpus = [s for s in corpus if _order_or_none(s) is None or _order_or_none(s) <= max_order]
    props = SUITE_PROPERTIES[suite]
    entries: list[Entry] = []
    if props:
        jobs = [(text, props, budget) for text in corpus]
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                entries = list(pool.map(_verify_star, jobs))
        else:
            entries = [_verify_star(j) for j in jobs]
    if suite in ("fixtures", "all"):
        entries += fixture_entries(budget)
    return VerificationReport(suite, entries, budget)
