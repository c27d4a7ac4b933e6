"""Scripted reproduction run: one step per phenomenon, each a pass/fail entry."""

from __future__ import annotations

from . import cross, gauge, ideals, lpa
from .errors import NotARepresentation, NotEnoughDistinctUnits
from .graph import line_graph, loop_graph, product_graph
from .scalars import FieldSpec, field_units

F2, F3, Q = FieldSpec.prime(2), FieldSpec.prime(3), FieldSpec.rationals()


def _sample(K: FieldSpec) -> lpa.LpaElement:
    # u1 + f + f* on u1 -f-> u2: one term in each of the degrees -1, 0, 1
    g = line_graph()
    return lpa.vertex(g, K, "u1") + lpa.edge(g, K, "f") + lpa.ghost(g, K, "f")


def step_classical_f2(field, naive):
    a = _sample(F2)
    action = gauge.GaugeAction(a.graph, F2)
    comps = lpa.grade(a)
    rows = {}
    ok = True
    for n in range(-2, 3):
        classical = gauge.classical_eigenspace(a, n)
        schematic = gauge.recover_component(action, a, n)
        exact = comps.get(n, lpa.zero(a.graph, F2))
        ok &= classical == a and schematic == exact
        rows[str(n)] = {"classical": str(classical), "schematic": str(schematic)}
    ok &= field_units(F2) == [1]
    return ok, {"element": str(a), "by_degree": rows}


def step_coarsening(field, naive):
    a = _sample(F3)
    even_odd = lpa.coarsen(lpa.grade(a), 2)
    rows = {}
    ok = True
    for n in range(-3, 4):
        classical = gauge.classical_eigenspace(a, n)
        expected = even_odd.get(n % 2, lpa.zero(a.graph, F3))
        ok &= classical == expected
        rows[str(n)] = str(classical)
    return ok, {"element": str(a), "by_degree": rows}


def _loop_ideal_step(K, coeffs):
    I = ideals.laurent_ideal(coeffs, K)
    classical = ideals.is_classically_invariant(I).holds
    graded = ideals.is_graded_ideal(I).holds
    schematic = ideals.is_schematically_invariant(I).holds
    ok = classical and not graded and not schematic
    return ok, {"generator": str(I.generator), "field": K.name, "classically_invariant": classical,
                "graded": graded, "schematically_invariant": schematic}


def step_ideal_f2(field, naive):
    return _loop_ideal_step(F2, {0: 1, 1: 1})


def step_ideal_f3(field, naive):
    return _loop_ideal_step(F3, {0: 1, 2: 1})


def step_vandermonde(field, naive):
    a3 = _sample(F3)
    try:
        ideals.vandermonde_split(a3, [1, 2])
        f3_fails = False
    except NotEnoughDistinctUnits:
        f3_fails = True
    aq = _sample(Q)
    q_ok = ideals.vandermonde_split(aq, [1, 2, 3]) == lpa.grade(aq)
    return f3_fails and q_ok, {"F3_raises": f3_fails, "Q_recovers_grade": q_ok}


def step_comodule(field, naive):
    K = Q if field is None else field
    Z = gauge.GradingGroup.integers()
    degrees = [0, 1, -1, 2, 2]
    system = gauge.comodule_to_idempotents(gauge.grading_to_comodule(degrees, Z, K))
    round_trip = gauge.idempotents_to_degrees(system) == degrees
    R = Z.representing_algebra(K)
    x = R.x
    bad = [[R.one, x - x * x, R.zero], [R.zero, x, R.zero], [R.zero, R.zero, x * x]]
    try:
        gauge.comodule_to_idempotents(gauge.ComoduleMap(Z, K, bad))
        rejected = False
    except NotARepresentation:
        rejected = True
    return round_trip and rejected, {"degrees": degrees, "round_trip": round_trip, "perturbed_rejected": rejected}


def step_schematic_recovery(field, naive):
    g = product_graph(line_graph(), line_graph())
    K = F2
    a = lpa.unit(g, K)
    for e in g.edges:
        a = a + lpa.edge(g, K, e.id) + lpa.ghost(g, K, e.id)
    a = a * a
    action = gauge.GaugeAction(g, K)
    comps = lpa.grade(a)
    ok = all(gauge.recover_component(action, a, n) == comps.get(n, lpa.zero(g, K)) for n in range(-3, 4))
    total = lpa.zero(g, K)
    for c in comps.values():
        total = total + c
    ok &= total == a
    return ok, {"degrees": sorted(comps), "terms": len(a)}


def step_dimensions(field, naive):
    K = Q if field is None else field
    E = line_graph()
    u1, u2 = lpa.vertex(E, K, "u1"), lpa.vertex(E, K, "u2")
    f, fs = lpa.edge(E, K, "f"), lpa.ghost(E, K, "f")
    m2 = f * fs == u1 and fs * f == u2 and (u1 * u2).is_zero()
    d1 = lpa.basis_and_dimension(E, K).dim
    d2 = lpa.basis_and_dimension(product_graph(E, E), K).dim
    d3 = cross.naive_tensor_dimension(E, E)
    ok = m2 and (d1, d2, d3) == (4, 6, 16)
    return ok, {"field": K.name, "matrix_units": m2, "dims": [d1, d2, d3]}


def step_cross_dim(field, naive):
    K = Q if field is None else field
    E = line_graph()
    dim = cross.naive_tensor_dimension(E, E) if naive else cross.cross_product(E, E, K).dim
    return dim == 6, {"field": K.name, "dim": dim, "expected": 6, "naive_tensor": naive}


def step_iso_loop(field, naive):
    K = Q if field is None else field
    v = cross.verify_iso(loop_graph(), loop_graph(), K, 5, naive=naive)
    return v.verdict == cross.PROVEN_AT_BOUND and v.surjective is not None, v.to_json()


STEPS = [
    ("classical-f2", "over F2 every classical eigenspace is the whole element; the schematic action recovers each component",
     step_classical_f2),
    ("coarsening", "over F3 the classical eigenspaces are the mod-2 coarsening of the grading", step_coarsening),
    ("ideal-f2", "(1+x) in K[x,1/x] over F2 is classically invariant but neither graded nor schematically invariant",
     step_ideal_f2),
    ("ideal-f3", "(1+x^2) in K[x,1/x] over F3 is classically invariant but neither graded nor schematically invariant",
     step_ideal_f3),
    ("vandermonde", "three degrees cannot be separated by the two units of F3 but can be over Q", step_vandermonde),
    ("comodule", "a grading round-trips through its comodule and a perturbed structure map is rejected",
     step_comodule),
    ("schematic-recovery", "over F2 the universal element recovers every homogeneous component", step_schematic_recovery),
    ("dimensions", "for E = u1 -> u2: L(E) = M2(K) has dimension 4, L(ExE) 6 and L(E) (x) L(E) 16", step_dimensions),
    ("cross-dim", "the cross product L(E) (x)_GL1 L(E) has dimension 6", step_cross_dim),
    ("iso-loop", "L(loop x loop) maps isomorphically onto the cross product up to degree 5", step_iso_loop),
]


def step_names() -> list[str]:
    return [name for name, _, _ in STEPS]


def run_suite(field: FieldSpec | None = None, only: str | None = None, naive_tensor: bool = False) -> list[dict]:
    """Run the steps in order.  ``field`` applies to the field-generic steps."""
    if only is not None and only not in step_names():
        raise ValueError(f"unknown step {only!r}; choose from {', '.join(step_names())}")
    out = []
    for name, claim, fn in STEPS:
        if only is not None and name != only:
            continue
        passed, details = fn(field, naive_tensor)
        out.append({"name": name, "claim": claim, "passed": bool(passed), "details": details})
    return out
