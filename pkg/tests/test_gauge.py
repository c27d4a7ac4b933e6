from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leavitt import gauge, lpa
from leavitt.errors import InfiniteUnitGroup, NotARepresentation, NotAUnit, ParseError, ZeroScalar
from leavitt.gauge import Extended, GaugeAction, GradingGroup
from leavitt.graph import line_graph
from leavitt.linalg import identity, is_zero_matrix, matadd, matmul, zeros
from leavitt.sampling import random_grading, random_unit
from leavitt.scalars import FieldSpec, TestAlgebra
from strategies import fields, graph_elements, rngs

F2, F3, Q = FieldSpec.prime(2), FieldSpec.prime(3), FieldSpec.rationals()
E = line_graph()
Z = GradingGroup.integers()


def _gens(K):
    return lpa.vertex(E, K, "u1"), lpa.edge(E, K, "f"), lpa.ghost(E, K, "f")


def test_classical_examples():
    u1, f, fs = _gens(F3)
    assert gauge.classical_apply(u1 + f, -1) == u1 - f
    a = u1 + f + fs
    assert gauge.classical_apply(a, 1) == a
    for z in (1, 2):
        assert gauge.classical_apply(f * fs, z) == f * fs
    with pytest.raises(ZeroScalar):
        gauge.classical_apply(a, 0)


def test_schematic_examples():
    _, f, _ = _gens(F2)
    R = TestAlgebra.laurent(F2)
    action = GaugeAction(E, F2)
    image = action.apply(R.x, Extended.lift(f, R))
    assert image == Extended.lift(f, R, R.x)
    assert image != Extended.lift(f, R)
    t = Extended.lift(f, R, R.one + R.x)
    assert action.apply(R.one, t) == t
    with pytest.raises(NotAUnit):
        action.apply(R.one + R.x, t)


def test_recover_component_examples():
    u1, f, fs = _gens(F2)
    assert gauge.recover_component(GaugeAction(E, F2), u1 + f, 1) == f
    _, f3, fs3 = _gens(F3)
    assert gauge.recover_component(GaugeAction(E, F3), f3 + fs3, 1) == f3
    assert gauge.classical_eigenspace(f3 + fs3, 1) == f3 + fs3


def test_classical_eigenspace_examples():
    _, f, fs = _gens(F2)
    assert gauge.classical_eigenspace(f + fs, 1) == f + fs
    _, f, fs = _gens(Q)
    assert gauge.classical_eigenspace(f + fs, 1, bound=10) == f
    with pytest.raises(InfiniteUnitGroup):
        gauge.classical_eigenspace(f + fs, 1)


@given(graph_elements(), rngs)
def test_schematic_is_a_homomorphism_of_groups(data, rng):
    g, K, (a,) = data
    for R in (TestAlgebra.laurent(K), TestAlgebra.cyclic(K, 3)):
        action = GaugeAction(g, K)
        z, w = random_unit(rng, R), random_unit(rng, R)
        t = Extended.lift(a, R, random_unit(rng, R))
        assert action.apply(z * w, t) == action.apply(z, action.apply(w, t))


@given(graph_elements(n=2), rngs)
def test_schematic_is_multiplicative(data, rng):
    g, K, (a, b) = data
    R = TestAlgebra.laurent(K)
    action = GaugeAction(g, K)
    z = random_unit(rng, R)
    ta, tb = Extended.lift(a, R), Extended.lift(b, R)
    assert action.apply(z, ta * tb) == action.apply(z, ta) * action.apply(z, tb)


@given(graph_elements(), st.integers(2, 4))
def test_naturality_along_laurent_to_cyclic(data, n):
    g, K, (a,) = data
    L, C = TestAlgebra.laurent(K), TestAlgebra.cyclic(K, n)
    action = GaugeAction(g, K)
    universal = action.apply(L.x, Extended.lift(a, L))
    assert universal.pushforward(C.x) == action.apply(C.x, Extended.lift(a, C))


@given(graph_elements())
def test_recover_component_equals_grade(data):
    g, K, (a,) = data
    action = GaugeAction(g, K)
    comps = lpa.grade(a)
    for n in range(-3, 4):
        assert gauge.recover_component(action, a, n) == comps.get(n, lpa.zero(g, K))


@given(graph_elements(field=None), st.integers(2, 3))
def test_cyclic_group_recovers_coarsening(data, n):
    g, K, (a,) = data
    action = GaugeAction(g, K, GradingGroup.cyclic(n))
    coarse = lpa.coarsen(lpa.grade(a), n)
    for i in range(n):
        assert gauge.recover_component(action, a, i) == coarse.get(i, lpa.zero(g, K))


@given(st.sampled_from([F2, FieldSpec.prime(3), FieldSpec.prime(5)]).flatmap(
    lambda K: graph_elements(field=K)))
def test_classical_eigenspace_is_coarsening_over_fp(data):
    g, K, (a,) = data
    coarse = lpa.coarsen(lpa.grade(a), K.p - 1)
    for n in range(-3, 4):
        assert gauge.classical_eigenspace(a, n) == coarse.get(n % (K.p - 1), lpa.zero(g, K))


@given(graph_elements(field=Q))
def test_classical_eigenspace_is_exact_over_q(data):
    g, K, (a,) = data
    comps = lpa.grade(a)
    for n in range(-3, 4):
        assert gauge.classical_eigenspace(a, n, bound=3) == comps.get(n, lpa.zero(g, K))


@given(graph_elements(), rngs)
def test_classical_agrees_with_schematic_at_base(data, rng):
    g, K, (a,) = data
    B = TestAlgebra.base(K)
    z = random_unit(rng, B)
    image = GaugeAction(g, K).apply(z, Extended.lift(a, B)).specialize()
    assert image == gauge.classical_apply(a, z.coefficient(0))


@given(graph_elements(n=2), rngs)
def test_classical_is_an_automorphism(data, rng):
    g, K, (a, b) = data
    z = rng.choice([1, 2, Fraction(3, 2)] if not K.is_finite else range(1, K.p))
    assert gauge.classical_apply(a * b, z) == gauge.classical_apply(a, z) * gauge.classical_apply(b, z)
    assert gauge.classical_apply(gauge.classical_apply(a, z), K.inv(K.norm(z))) == a


# comodules


def _check_system(system, n):
    K = system.field
    ps = system.projections
    total = zeros(n, n, K)
    for lam, p in ps.items():
        total = matadd(total, p, K)
        assert matmul(p, p, K) == p
        for mu, q in ps.items():
            if mu != lam:
                assert is_zero_matrix(matmul(p, q, K))
    assert total == identity(n, K)


def test_comodule_examples():
    R = TestAlgebra.laurent(Q)
    x = R.x
    c = gauge.ComoduleMap(Z, Q, [[x**2, R.zero, R.zero], [R.zero, x**2, R.zero], [R.zero, R.zero, x**-1]])
    system = gauge.comodule_to_idempotents(c)
    assert system.projections[2] == [[1, 0, 0], [0, 1, 0], [0, 0, 0]]
    assert system.projections[-1] == [[0, 0, 0], [0, 0, 0], [0, 0, 1]]
    trivial = gauge.ComoduleMap(Z, Q, [[R.one, R.zero], [R.zero, R.one]])
    assert gauge.comodule_to_idempotents(trivial).projections == {0: identity(2, Q)}


def test_grading_to_comodule_examples():
    R = TestAlgebra.laurent(Q)
    c = gauge.grading_to_comodule([0, 1, -1], Z, Q)
    assert [c.matrix[i][i] for i in range(3)] == [R.one, R.x, R.x**-1]
    C = TestAlgebra.cyclic(Q, 2)
    c2 = gauge.grading_to_comodule([0, 1], GradingGroup.cyclic(2), Q)
    assert c2.matrix[1][1] == C.x and c2.algebra == C


@given(rngs, fields, st.sampled_from([None, 2, 3]))
def test_grading_round_trip(rng, K, n):
    group = GradingGroup(n)
    degrees = random_grading(rng)
    system = gauge.comodule_to_idempotents(gauge.grading_to_comodule(degrees, group, K))
    _check_system(system, len(degrees))
    assert gauge.idempotents_to_degrees(system) == [group.reduce(d) for d in degrees]


def test_perturbed_comodule_rejected():
    R = TestAlgebra.laurent(Q)
    x = R.x
    bad = gauge.ComoduleMap(Z, Q, [[R.one, x - x * x, R.zero], [R.zero, x, R.zero], [R.zero, R.zero, x * x]])
    with pytest.raises(NotARepresentation) as info:
        gauge.comodule_to_idempotents(bad)
    assert any("p_2" in f for f in info.value.failures)


def test_conjugated_grading_is_still_a_representation():
    # [[1, 0], [x - 1, x]] is diag(1, x) in the basis (m1 + m2, m2)
    R = TestAlgebra.laurent(Q)
    x = R.x
    c = gauge.ComoduleMap(Z, Q, [[R.one, R.zero], [x - R.one, x]])
    _check_system(gauge.comodule_to_idempotents(c), 2)


def test_comodule_counit_failure():
    R = TestAlgebra.laurent(Q)
    c = gauge.ComoduleMap(Z, Q, [[R.monomial(0, 2)]])
    with pytest.raises(NotARepresentation) as info:
        gauge.comodule_to_idempotents(c)
    assert any("counit" in f for f in info.value.failures)


def test_comodule_json_round_trip():
    c = gauge.grading_to_comodule([3, -1, 0], Z, F3)
    assert gauge.ComoduleMap.from_json(c.to_json()) == c
    with pytest.raises(ParseError):
        gauge.ComoduleMap.from_json({"group": "Z", "matrix": []})


def test_evaluate_pushes_forward():
    c = gauge.grading_to_comodule([1, 2], Z, F3)
    C = TestAlgebra.cyclic(F3, 2)
    m = c.evaluate(C.x)
    assert m[0][0] == C.x and m[1][1] == C.one


def test_grading_group_parse():
    assert GradingGroup.parse("Z") == Z
    assert GradingGroup.parse("Z3") == GradingGroup.cyclic(3)
    with pytest.raises(ParseError):
        GradingGroup.parse("Q")
    with pytest.raises(NotAUnit):
        GradingGroup.cyclic(2).check_point(TestAlgebra.laurent(Q).x)

