"""Hypothesis strategies built on the seeded samplers."""

import random

from hypothesis import strategies as st

from leavitt.graph import line_graph, loop_graph, product_graph
from leavitt.sampling import GraphConfig, random_element, random_graph
from leavitt.scalars import FieldSpec

FIELDS = [FieldSpec.prime(2), FieldSpec.prime(3), FieldSpec.prime(5), FieldSpec.rationals()]

fields = st.sampled_from(FIELDS)
rngs = st.integers(0, 2**32 - 1).map(random.Random)


def scalars(K, nonzero=False):
    if K.is_finite:
        lo = 1 if nonzero else 0
        return st.integers(lo, K.p - 1)
    vals = st.fractions(min_value=-20, max_value=20, max_denominator=7)
    return vals.filter(bool) if nonzero else vals


@st.composite
def acyclic_graphs(draw, max_vertices=4, max_edges=5):
    rng = draw(rngs)
    return random_graph(rng, GraphConfig(max_vertices, max_edges, acyclic=True))


@st.composite
def any_graphs(draw, max_vertices=3, max_edges=4):
    rng = draw(rngs)
    return random_graph(rng, GraphConfig(max_vertices, max_edges, acyclic=False, allow_loops=True))


FIXED_GRAPHS = [line_graph(), loop_graph(), product_graph(line_graph(), line_graph())]


@st.composite
def graph_elements(draw, graphs=None, field=None, n=1):
    """(graph, field, [elements]) with a shared graph and field."""
    g = draw(graphs if graphs is not None else st.one_of(st.sampled_from(FIXED_GRAPHS), acyclic_graphs()))
    K = field if field is not None else draw(fields)
    rng = draw(rngs)
    return g, K, [random_element(rng, g, K) for _ in range(n)]
