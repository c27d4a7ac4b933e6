"""Command-line front end.

Exit status: 0 when the verdict is positive, 1 when it is negative, 2 on bad
input.  ``--json`` switches every report to deterministic JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FilePath

from . import cross, gauge, ideals, lpa
from .errors import LeavittError, NotARepresentation, NotEnoughDistinctUnits, ParseError
from .graph import Graph, line_graph, loop_graph, point_graph, product_graph, validate
from .scalars import FieldSpec

BUILTIN_GRAPHS = {"@line": line_graph, "@loop": loop_graph, "@point": point_graph}


# ---------------------------------------------------------------------------
# input helpers
# ---------------------------------------------------------------------------

def _read_json(path: str):
    try:
        text = FilePath(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", exc.lineno, exc.colno) from None


def load_graph(source: str) -> Graph:
    if source in BUILTIN_GRAPHS:
        return BUILTIN_GRAPHS[source]()
    return Graph.from_json(_read_json(source))


def load_element(path: str, graph: Graph, field: FieldSpec) -> lpa.LpaElement:
    return lpa.LpaElement.from_json(graph, field, _read_json(path))


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise ParseError(f"--{name} is required for {args.verb}")
    return value


# ---------------------------------------------------------------------------
# verbs: each returns (exit status, report dict, text lines)
# ---------------------------------------------------------------------------

def cmd_graph_check(args):
    g = load_graph(_need(args, "graph"))
    rep = validate(g).to_json()
    lines = [f"vertices = {len(g.vertices)}, edges = {len(g.edges)}",
             f"sinks = {rep['sinks']}", f"acyclic = {rep['acyclic']}"]
    return 0, rep, lines


def cmd_product_graph(args):
    g = product_graph(load_graph(_need(args, "left")), load_graph(_need(args, "right")))
    return 0, g.to_json(), [g.dumps()]


def cmd_lpa_dim(args):
    g = load_graph(_need(args, "graph"))
    rep = lpa.basis_and_dimension(g, args.field)
    report = {"dim": rep.dim, "sink_formula_dim": rep.sink_formula_dim,
              "basis": [str(m) for m in rep.basis]}
    return (0 if rep.consistent else 1), report, [f"dim = {rep.dim}"]


def cmd_lpa_mul(args):
    g = load_graph(_need(args, "graph"))
    if len(args.elements) != 2:
        raise ParseError("lpa-mul takes exactly two element files")
    a, b = (load_element(p, g, args.field) for p in args.elements)
    prod = a * b
    return 0, {"product": prod.to_json()}, [str(prod)]


def cmd_grade(args):
    g = load_graph(_need(args, "graph"))
    if len(args.elements) != 1:
        raise ParseError("grade takes one element file")
    a = load_element(args.elements[0], g, args.field)
    comps = lpa.grade(a)
    return 0, {str(d): c.to_json() for d, c in comps.items()}, [f"{d}: {c}" for d, c in comps.items()]


def cmd_coarsen(args):
    g = load_graph(_need(args, "graph"))
    if len(args.elements) != 1:
        raise ParseError("coarsen takes one element file")
    a = load_element(args.elements[0], g, args.field)
    comps = lpa.coarsen(lpa.grade(a), _need(args, "n"))
    return 0, {str(d): c.to_json() for d, c in comps.items()}, [f"{d} mod {args.n}: {c}" for d, c in comps.items()]


def _demo_element(g: Graph, K: FieldSpec) -> lpa.LpaElement:
    out = lpa.unit(g, K)
    for e in g.edges:
        out = out + lpa.edge(g, K, e.id) + lpa.ghost(g, K, e.id)
    return out


def cmd_gauge_demo(args):
    g = load_graph(args.graph) if args.graph else line_graph()
    K = args.field
    a = load_element(args.elements[0], g, K) if args.elements else _demo_element(g, K)
    action = gauge.GaugeAction(g, K)
    degs = lpa.grade(a)
    lo, hi = (min(degs), max(degs)) if degs else (0, 0)
    rows = []
    ok = True
    for n in range(lo, hi + 1):
        classical = gauge.classical_eigenspace(a, n, bound=args.bound or 10)
        schematic = gauge.recover_component(action, a, n)
        exact = degs.get(n, lpa.zero(g, K))
        ok &= schematic == exact
        rows.append({"degree": n, "classical": str(classical), "schematic": str(schematic),
                     "classical_exact": classical == exact})
    lines = [f"element: {a}"]
    lines += [f"n={r['degree']}: classical -> {r['classical']} | schematic -> {r['schematic']}" for r in rows]
    return (0 if ok else 1), {"element": a.to_json(), "degrees": rows, "schematic_recovers": ok}, lines


def cmd_ideal_check(args):
    g = load_graph(_need(args, "graph"))
    K = args.field
    gens = [load_element(p, g, K) for p in args.elements]
    if g.is_acyclic:
        I = ideals.ideal_generated_by(gens, g, K)
        head = f"ideal of dimension {I.dim}"
    else:
        # the loop graph: K[x, 1/x] is a principal ideal domain
        I = ideals.laurent_ideal_generated_by([lpa.laurent_realize(a) for a in gens], K)
        head = f"ideal ({I.generator})"
    graded = ideals.is_graded_ideal(I)
    schematic = ideals.is_schematically_invariant(I)
    classical = ideals.is_classically_invariant(I, args.bound or 10).holds
    report = {"ideal": I.to_json(), "graded": graded.holds, "schematically_invariant": schematic.holds,
              "classically_invariant": classical}
    lines = [head, f"graded = {graded.holds}", f"schematically invariant = {schematic.holds}",
             f"classically invariant = {classical}"]
    return (0 if graded.holds else 1), report, lines


def cmd_vandermonde(args):
    g = load_graph(_need(args, "graph"))
    K = args.field
    if len(args.elements) != 1:
        raise ParseError("vandermonde takes one element file")
    a = load_element(args.elements[0], g, K)
    units = [K.parse_value(u) for u in _need(args, "units").split(",") if u.strip()]
    try:
        comps = ideals.vandermonde_split(a, units)
    except NotEnoughDistinctUnits as exc:
        return 1, {"error": str(exc)}, [f"failed: {exc}"]
    ok = comps == lpa.grade(a)
    return (0 if ok else 1), {"components": {str(d): c.to_json() for d, c in comps.items()}, "matches_grade": ok}, \
        [f"{d}: {c}" for d, c in comps.items()]


def cmd_comodule(args):
    if len(args.elements) != 1:
        raise ParseError("comodule takes one comodule file")
    c = gauge.ComoduleMap.from_json(_read_json(args.elements[0]))
    try:
        system = gauge.comodule_to_idempotents(c)
    except NotARepresentation as exc:
        return 1, {"representation": False, "failures": exc.failures}, [str(exc)]
    lines = [f"p_{lam}: rank {system.rank(lam)}" for lam in system.degrees()]
    return 0, {"representation": True, "idempotents": system.to_json()}, lines


def cmd_cross_dim(args):
    e, f = load_graph(_need(args, "left")), load_graph(_need(args, "right"))
    if args.naive_tensor:
        dim = cross.naive_tensor_dimension(e, f, args.bound)
        return 0, {"kind": "tensor", "dim": dim, "bound": args.bound}, [f"dim = {dim} (full tensor product)"]
    space = cross.cross_product(e, f, args.field, args.bound)
    by_deg = {str(k): v for k, v in space.degree_dimensions().items()}
    return 0, {"kind": "cross", "dim": space.dim, "bound": args.bound, "by_degree": by_deg}, \
        [f"dim = {space.dim}"]


def cmd_verify_iso(args):
    e, f = load_graph(_need(args, "left")), load_graph(_need(args, "right"))
    v = cross.verify_iso(e, f, args.field, args.bound, naive=args.naive_tensor)
    d = v.dimensions
    lines = [f"verdict: {v.verdict}",
             f"dimensions {d['domain']} vs {d['target']} ({d['target_kind']}, bound {d['bound']})"]
    lines += [f"note: {n}" for n in v.notes]
    return (0 if v.ok else 1), v.to_json(), lines


def cmd_paper_suite(args):
    from .suite import run_suite

    results = run_suite(field=args.field, only=args.only, naive_tensor=args.naive_tensor)
    passed = sum(r["passed"] for r in results)
    lines = [f"[{'PASS' if r['passed'] else 'FAIL'}] {r['name']}: {r['claim']}" for r in results]
    lines.append(f"{passed}/{len(results)} pass")
    report = {"steps": results, "passed": passed, "total": len(results)}
    return (0 if passed == len(results) and results else 1), report, lines


VERBS = {
    "graph-check": cmd_graph_check,
    "lpa-dim": cmd_lpa_dim,
    "lpa-mul": cmd_lpa_mul,
    "grade": cmd_grade,
    "coarsen": cmd_coarsen,
    "gauge-demo": cmd_gauge_demo,
    "ideal-check": cmd_ideal_check,
    "vandermonde": cmd_vandermonde,
    "comodule": cmd_comodule,
    "cross-dim": cmd_cross_dim,
    "product-graph": cmd_product_graph,
    "verify-iso": cmd_verify_iso,
    "paper-suite": cmd_paper_suite,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="leavitt", description="Exact computations with Leavitt path algebras and gauge actions.")
    p.add_argument("verb", choices=sorted(VERBS))
    p.add_argument("elements", nargs="*", help="element / generator / comodule JSON files")
    p.add_argument("--graph", help="graph JSON file (or @line, @loop, @point)")
    p.add_argument("--left", help="left factor graph")
    p.add_argument("--right", help="right factor graph")
    p.add_argument("--field", default="Q", help="F2, F3, F5, ... or Q")
    p.add_argument("--bound", type=int, help="truncation length / sampling bound")
    p.add_argument("--n", type=int, help="modulus for coarsen")
    p.add_argument("--units", help="comma-separated scalars for vandermonde")
    p.add_argument("--only", help="run a single paper-suite step")
    p.add_argument("--naive-tensor", action="store_true", help="use the full tensor product instead of the cross product")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.field = FieldSpec.parse(args.field)
        status, report, lines = VERBS[args.verb](args)
    except (LeavittError, ValueError) as exc:
        msg = str(exc)
        if "--json" in (argv if argv is not None else sys.argv):
            print(json.dumps({"error": msg}, sort_keys=True))
        else:
            print(f"error: {msg}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
