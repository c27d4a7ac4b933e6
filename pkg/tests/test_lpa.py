import random

import pytest
from hypothesis import given, settings

from leavitt import lpa
from leavitt.errors import GraphMismatch, InfiniteDimensional, NotLoopGraph, ParseError, UnknownId
from leavitt.graph import Edge, Graph, enumerate_paths, line_graph, loop_graph, point_graph, product_graph
from leavitt.linalg import rank
from leavitt.sampling import GraphConfig, random_element, random_graph
from leavitt.scalars import FieldSpec
from strategies import acyclic_graphs, any_graphs, fields, graph_elements, rngs

F2, F3, Q = FieldSpec.prime(2), FieldSpec.prime(3), FieldSpec.rationals()
E = line_graph()


def test_generators_of_line_graph():
    u1, u2 = lpa.vertex(E, F3, "u1"), lpa.vertex(E, F3, "u2")
    f, fs = lpa.edge(E, Q, "f"), lpa.ghost(E, Q, "f")
    assert u1 * u1 == u1 and (u1 * u2).is_zero()
    assert f.degrees() == [1] and fs.degrees() == [-1]
    assert lpa.generator(E, Q, "ghost", "f") == fs
    with pytest.raises(UnknownId):
        lpa.vertex(E, Q, "w")


def test_line_graph_is_matrix_algebra():
    u1, u2 = lpa.vertex(E, Q, "u1"), lpa.vertex(E, Q, "u2")
    f, fs = lpa.edge(E, Q, "f"), lpa.ghost(E, Q, "f")
    assert fs * f == u2
    assert f * fs == u1
    assert (u1 * u2).is_zero()
    assert lpa.vertex(E, Q, "u1") * f == f == f * u2
    assert (f * f).is_zero()


def test_involution_examples():
    g = Graph(("a", "b", "c"), (Edge("f", "a", "b"), Edge("g", "b", "c"), Edge("h", "a", "c")))
    f, gg, h = (lpa.edge(g, Q, x) for x in "fgh")
    assert lpa.involution(f) == lpa.ghost(g, Q, "f")
    assert lpa.vertex(g, Q, "a").star() == lpa.vertex(g, Q, "a")
    assert ((f * gg) * h.star()).star() == h * gg.star() * f.star()


def test_grade_and_coarsen_examples():
    u1, f, fs = lpa.vertex(E, Q, "u1"), lpa.edge(E, Q, "f"), lpa.ghost(E, Q, "f")
    assert lpa.grade(u1 + f) == {0: u1, 1: f}
    g = product_graph(E, E)
    ff = lpa.edge(g, Q, "(f,f)")
    assert list(lpa.grade(ff * ff.star())) == [0]
    assert lpa.grade(lpa.zero(E, Q)) == {}
    dec = {-1: fs, 0: u1, 1: f}
    assert lpa.coarsen(dec, 2) == {0: u1, 1: f + fs}
    assert lpa.coarsen(dec, 1) == {0: fs + u1 + f}
    assert lpa.coarsen({0: u1}, 3) == {0: u1}


@pytest.mark.parametrize("graph, dim", [(line_graph(), 4), (product_graph(line_graph(), line_graph()), 6),
                                        (point_graph(), 1)])
def test_dimensions(graph, dim):
    rep = lpa.basis_and_dimension(graph, Q)
    assert rep.dim == dim and rep.consistent


def test_infinite_dimensional():
    with pytest.raises(InfiniteDimensional):
        lpa.basis_and_dimension(loop_graph())


def test_sink_formula_on_random_acyclic_graphs():
    rng = random.Random(20)
    for _ in range(20):
        g = random_graph(rng, GraphConfig(max_vertices=6, max_edges=8, acyclic=True))
        rep = lpa.basis_and_dimension(g)
        assert rep.consistent, g


def test_laurent_realize_examples():
    L = loop_graph()
    v, e = lpa.vertex(L, Q, "v"), lpa.edge(L, Q, "e")
    R = lpa.laurent_realize(v + e).algebra
    assert lpa.laurent_realize(v + e) == R.one + R.x
    assert lpa.laurent_realize(e.star() * e) == R.one
    assert lpa.laurent_realize(e * e) == R.x**2
    assert lpa.from_laurent(L, R.x**-3) == e.star() * e.star() * e.star()
    with pytest.raises(NotLoopGraph):
        lpa.laurent_realize(lpa.vertex(E, Q, "u1"))


@given(fields, rngs)
def test_laurent_realize_is_a_ring_map(K, rng):
    L = loop_graph()
    a, b = random_element(rng, L, K), random_element(rng, L, K)
    assert lpa.laurent_realize(a * b) == lpa.laurent_realize(a) * lpa.laurent_realize(b)
    assert lpa.from_laurent(L, lpa.laurent_realize(a)) == a


@given(any_graphs(), rngs)
def test_ck_relations(g, rng):
    K = rng.choice([F2, F3, Q])
    for e in g.edges:
        for f in g.edges:
            lhs = lpa.ghost(g, K, e.id) * lpa.edge(g, K, f.id)
            rhs = lpa.vertex(g, K, e.rng) if e.id == f.id else lpa.zero(g, K)
            assert (lhs - rhs).is_zero()
    for v in g.vertices:
        es = g.emitted[v]
        if es:
            total = lpa.zero(g, K)
            for x in es:
                total = total + lpa.edge(g, K, x) * lpa.ghost(g, K, x)
            assert (lpa.vertex(g, K, v) - total).is_zero()


@given(graph_elements(n=3))
def test_associativity(data):
    _, _, (a, b, c) = data
    assert (a * b) * c == a * (b * c)


@given(graph_elements(n=2))
def test_involution_laws(data):
    _, _, (a, b) = data
    assert (a * b).star() == b.star() * a.star()
    assert a.star().star() == a
    assert sorted(-d for d in a.degrees()) == a.star().degrees()


@given(graph_elements(n=2))
def test_grading_is_additive(data):
    _, _, (a, b) = data
    for da, ca in lpa.grade(a).items():
        for db, cb in lpa.grade(b).items():
            prod = ca * cb
            assert prod.is_zero() or prod.degrees() == [da + db]
    total = lpa.zero(a.graph, a.field)
    for comp in lpa.grade(a).values():
        assert comp.is_homogeneous()
        total = total + comp
    assert total == a


@given(graph_elements(graphs=any_graphs(), n=2), rngs)
def test_confluence_against_word_rewriting(data, rng):
    _, _, (a, b) = data
    expected = a * b
    for _ in range(3):
        assert lpa.multiply_by_words(a, b, random.Random(rng.random())) == expected


@given(graph_elements(n=1))
def test_json_round_trip(data):
    g, K, (a,) = data
    assert lpa.LpaElement.from_json(g, K, a.to_json()) == a


def test_from_json_errors():
    with pytest.raises(ParseError):
        lpa.LpaElement.from_json(E, Q, {"mu": []})
    with pytest.raises(ParseError):
        lpa.LpaElement.from_json(E, Q, [{"mu": ["f"], "mu_base": "u1", "nu": [], "nu_base": "u1", "coeff": "1"}])


def test_graph_mismatch():
    with pytest.raises(GraphMismatch):
        lpa.vertex(E, Q, "u1") * lpa.vertex(loop_graph(), Q, "v")


# matrix oracle: for acyclic E, L_K(E) is a sum of matrix algebras indexed by
# paths ending at each sink; v, e, e* act on those paths directly


def _matrix_rep(g, K):
    paths = [p for p in enumerate_paths(g, len(g.vertices)) if p.target in g.sinks]
    idx = {p: i for i, p in enumerate(paths)}
    n = len(paths)

    def zero():
        return [[K.zero] * n for _ in range(n)]

    gens = {}
    for v in g.vertices:
        m = zero()
        for p in paths:
            if p.source == v:
                m[idx[p]][idx[p]] = K.one
        gens[("v", v)] = m
    for e in g.edges:
        m = zero()
        for p in paths:
            if p.source == e.rng:
                ep = g.path((e.id,) + p.edges, e.src)
                m[idx[ep]][idx[p]] = K.one
        gens[("e", e.id)] = m
        gens[("g", e.id)] = [list(r) for r in zip(*m)]
    return gens, n


def _mat_mul(A, B, K):
    out = []
    for row in A:
        new = []
        for col in zip(*B):
            acc = K.zero
            for a, b in zip(row, col):
                acc = K.add(acc, K.mul(a, b))
            new.append(acc)
        out.append(new)
    return out


def _represent(a, gens, n):
    K = a.field
    out = [[K.zero] * n for _ in range(n)]
    for m, c in a.raw_terms().items():
        mat = gens[("v", m.mu.source)]
        for x in m.mu.edges:
            mat = _mat_mul(mat, gens[("e", x)], K)
        for x in reversed(m.nu.edges):
            mat = _mat_mul(mat, gens[("g", x)], K)
        out = [[K.add(o, K.mul(c, v)) for o, v in zip(ro, rv)] for ro, rv in zip(out, mat)]
    return out


@settings(max_examples=30)
@given(acyclic_graphs(), rngs)
def test_product_matches_matrix_oracle(g, rng):
    K = rng.choice([F2, F3, Q])
    gens, n = _matrix_rep(g, K)
    a, b = random_element(rng, g, K), random_element(rng, g, K)
    assert _represent(a * b, gens, n) == _mat_mul(_represent(a, gens, n), _represent(b, gens, n), K)


@settings(max_examples=20)
@given(acyclic_graphs())
def test_normal_monomials_are_independent(g):
    # images of the basis are linearly independent, so the basis really is one
    gens, n = _matrix_rep(g, Q)
    rows = []
    for m in lpa.basis_and_dimension(g).basis:
        mat = _represent(lpa.LpaElement(g, Q, {m: 1}), gens, n)
        rows.append([v for row in mat for v in row])
    assert rank(rows, Q) == len(rows)
