"""Seeded random inputs for tests and experiment scripts."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cross import TensorElement
from .graph import Edge, Graph
from .lpa import LpaElement, Monomial, normal_monomials
from .scalars import FieldSpec, TestAlgebra, TestAlgebraElement, enumerate_units


@dataclass
class GraphConfig:
    max_vertices: int = 4
    max_edges: int = 5
    acyclic: bool = True
    allow_loops: bool = False


@dataclass
class ElementConfig:
    max_terms: int = 4
    max_length: int = 2  # path length cap for graphs with cycles


def random_scalar(rng: random.Random, K: FieldSpec, nonzero: bool = False):
    while True:
        if K.is_finite:
            c = rng.randrange(K.p)
        else:
            c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        if c or not nonzero:
            return K.norm(c)


def random_graph(rng: random.Random, cfg: GraphConfig = GraphConfig()) -> Graph:
    n = rng.randint(1, cfg.max_vertices)
    verts = [f"v{i}" for i in range(n)]
    edges = []
    for k in range(rng.randint(0, cfg.max_edges)):
        i, j = rng.randrange(n), rng.randrange(n)
        if cfg.acyclic:
            if i == j:
                continue
            i, j = min(i, j), max(i, j)  # edges only go up the vertex order
        elif i == j and not cfg.allow_loops:
            continue
        edges.append(Edge(f"e{k}", verts[i], verts[j]))
    return Graph(tuple(verts), tuple(edges))


def monomial_pool(g: Graph, cfg: ElementConfig = ElementConfig()) -> list[Monomial]:
    return normal_monomials(g, None if g.is_acyclic else cfg.max_length)


def random_element(rng: random.Random, g: Graph, K: FieldSpec, cfg: ElementConfig = ElementConfig(),
                   pool=None) -> LpaElement:
    pool = monomial_pool(g, cfg) if pool is None else pool
    terms = {}
    for _ in range(rng.randint(0, cfg.max_terms)):
        m = rng.choice(pool)
        terms[m] = K.add(terms.get(m, K.zero), random_scalar(rng, K, nonzero=True))
    return LpaElement(g, K, terms)


def random_element_in_degrees(rng: random.Random, g: Graph, K: FieldSpec, lo: int, hi: int,
                              cfg: ElementConfig = ElementConfig()) -> LpaElement:
    pool = [m for m in monomial_pool(g, cfg) if lo <= m.degree <= hi]
    return random_element(rng, g, K, cfg, pool)


def random_laurent(rng: random.Random, K: FieldSpec, lo: int = -2, hi: int = 2) -> TestAlgebraElement:
    R = TestAlgebra.laurent(K)
    return R.element({e: random_scalar(rng, K) for e in range(lo, hi + 1)})


def random_unit(rng: random.Random, R: TestAlgebra) -> TestAlgebraElement:
    """A random unit: c x^k for K or K[x, 1/x], any unit for K[x]/(x^n - 1) over F_p."""
    K = R.field
    if R.kind == "cyclic" and K.is_finite:
        return rng.choice(enumerate_units(R))
    k = rng.randint(-3, 3) if R.kind != "base" else 0
    return R.monomial(k, random_scalar(rng, K, nonzero=True))


def random_grading(rng: random.Random, size: int | None = None, lo: int = -3, hi: int = 3) -> list[int]:
    size = rng.randint(1, 6) if size is None else size
    return [rng.randint(lo, hi) for _ in range(size)]


def random_tensor(rng: random.Random, left: Graph, right: Graph, K: FieldSpec, max_terms: int = 4,
                  cfg: ElementConfig = ElementConfig()) -> TensorElement:
    lpool, rpool = monomial_pool(left, cfg), monomial_pool(right, cfg)
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        key = (rng.choice(lpool), rng.choice(rpool))
        terms[key] = K.add(terms.get(key, K.zero), random_scalar(rng, K, nonzero=True))
    return TensorElement(left, right, K, terms)
