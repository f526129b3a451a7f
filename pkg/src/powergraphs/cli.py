"""Command-line interface: ``powergraphs group|graph|analyze|genus|verify``.

Exit codes: 0 success (for ``verify``, the suite passed), 1 a failed
verification, 2 bad input, 3 a genus search ran out of budget.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import analysis as ga
from .embedding import Budget, euler_genus_at_most, is_outerplanar, is_planar, orientable_genus_at_most
from .embedding.genus import Decision
from .export import FORMATS, export_graph, from_graph6, from_json
from .graph import SimpleGraph
from .groups import GroupSpecError, build_group
from .oracle import classification_oracle
from .powergraph import complement_proper_power_graph, power_graph, proper_power_graph
from .specparse import parse_group_spec
from .suite import SUITES, load_manifest, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EXHAUSTED = 0, 1, 2, 3


def _fmt(v):
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return v


def _budget(args) -> Budget:
    base = Budget.from_env()
    return Budget(
        nodes=args.nodes if args.nodes is not None else base.nodes,
        seconds=args.timeout if args.timeout is not None else base.seconds,
    )


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--timeout", type=float, help="seconds per decision (default 600)")
    p.add_argument("--nodes", type=int, help="search nodes per decision (default 1e8)")


def cmd_group(args) -> int:
    spec = parse_group_spec(args.spec)
    g = build_group(spec)
    hist = g.order_histogram()
    print(f"spec: {spec.to_text()}")
    print(f"order: {g.order}")
    print(f"abelian: {g.is_abelian()}")
    print(f"cyclic: {g.is_cyclic()}")
    print("element orders: " + ", ".join(f"{d}:{c}" for d, c in sorted(hist.items())))
    print("cyclic subgroups: " + ", ".join(f"{d}:{g.count_cyclic_subgroups_of_order(d)}" for d in sorted(hist)))
    return EXIT_OK


def _graph_of(spec_text: str, kind: str) -> SimpleGraph:
    g = build_group(parse_group_spec(spec_text))
    builders = {"power": power_graph, "proper": proper_power_graph, "complement": complement_proper_power_graph}
    return builders[kind](g)


def cmd_graph(args) -> int:
    data = export_graph(_graph_of(args.spec, args.kind), args.format)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())
    return EXIT_OK


def cmd_analyze(args) -> int:
    spec = parse_group_spec(args.spec)
    group = build_group(spec)
    g = complement_proper_power_graph(group)
    rec = ga.property_record(g).as_dict()
    rec["is_planar"] = is_planar(g)
    rec["is_outerplanar"] = is_outerplanar(g)
    pred = classification_oracle(spec, group).as_dict()
    if args.json:
        doc = {
            "spec": spec.to_text(),
            "order": group.order,
            "vertices": g.n,
            "edges": g.num_edges(),
            "computed": {k: _fmt(v) for k, v in rec.items()},
            "predicted": {k: _fmt(v) for k, v in pred.items()},
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
        return EXIT_OK
    print(f"{spec.to_text()}: order {group.order}, complement graph n={g.n} m={g.num_edges()}")
    print(f"identified as: {pred['identified_as'] or '-'}")
    print(f"{'property':24} {'computed':>10} {'predicted':>10}")
    for k, v in rec.items():
        p = pred.get(k)
        print(f"{k:24} {str(_fmt(v)):>10} {'silent' if p is None else str(_fmt(p)):>10}")
    return EXIT_OK


def _load_graph(arg: str) -> SimpleGraph:
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
        return from_json(text) if text.lstrip().startswith("{") else from_graph6(text)
    return complement_proper_power_graph(build_group(parse_group_spec(arg)))


def cmd_genus(args) -> int:
    g = _load_graph(args.target)
    budget = _budget(args)
    results = []
    if args.orientable_max is not None:
        results.append(("orientable", orientable_genus_at_most(g, args.orientable_max, budget)))
    if args.euler_max is not None:
        results.append(("non-orientable", euler_genus_at_most(g, args.euler_max, budget)))
    if not results:
        results.append(("orientable", orientable_genus_at_most(g, 1, budget)))
    doc = []
    exhausted = False
    for label, r in results:
        exhausted |= r.decision is Decision.EXHAUSTED
        bound = f"genus <= {r.bound}" if r.orientable else f"crosscaps <= {r.bound}"
        print(f"{label} {bound}: {r.decision.value} (nodes {r.nodes}, {r.elapsed:.2f}s, via {', '.join(r.methods) or 'trivial'})")
        if r.witness is not None:
            print(f"  witness: {r.face_count} faces, Euler genus {r.euler_genus}")
        doc.append(r.as_dict())
    if args.witness:
        with open(args.witness, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
    return EXIT_EXHAUSTED if exhausted else EXIT_OK


def cmd_verify(args) -> int:
    corpus = load_manifest(args.corpus) if args.corpus else None
    report = run_suite(corpus, args.suite, _budget(args), args.max_order, args.workers)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_json(timing=not args.no_timing))
    s = report.summary()
    c = s["checks"]
    print(
        f"suite {args.suite}: {s['entries']} entries, {c['pass']} pass, {c['fail']} fail, "
        f"{c['inconclusive']} inconclusive, {c['silent']} silent, {c['error']} errors"
    )
    for label, item in report.failures():
        if isinstance(item, str):
            print(f"  ERROR {label}: {item}")
        else:
            print(f"  {item.status.upper()} {label} {item.name}: computed {_fmt(item.computed)}, predicted {_fmt(item.predicted)}")
    print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="powergraphs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="build a group and print its order statistics")
    p.add_argument("spec")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("graph", help="export a power graph")
    p.add_argument("spec")
    p.add_argument("--kind", choices=("power", "proper", "complement"), default="complement")
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("analyze", help="computed and predicted properties of the complement graph")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("genus", help="bounded genus decision for a group's complement graph or a graph file")
    p.add_argument("target", help="group spec, or a graph6 / JSON graph file")
    p.add_argument("--orientable-max", type=int, choices=(0, 1, 2))
    p.add_argument("--euler-max", type=int, choices=(0, 1, 2))
    p.add_argument("--witness", help="write results and witness schemes as JSON")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--corpus", help="manifest file (default: bundled corpus)")
    p.add_argument("--max-order", type=int)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--no-timing", action="store_true", help="omit timing fields from the report")
    p.add_argument("--workers", type=int, default=1)
    _add_budget_flags(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GroupSpecError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
