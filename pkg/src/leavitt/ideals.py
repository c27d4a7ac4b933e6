"""Two-sided ideals, gradedness and gauge invariance.

Two exact regimes are supported:

* acyclic graphs, where L_K(E) is finite-dimensional and an ideal is stored
  by its reduced echelon basis over the normal monomials;
* the single-loop graph, where L_K(E) = K[x, 1/x] is a principal ideal
  domain and an ideal is stored by a canonical generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InfiniteDimensional, NotEnoughDistinctUnits
from .gauge import Extended, GaugeAction, classical_apply
from .graph import Graph, loop_graph
from .linalg import EchelonSpan, solve_many
from .lpa import (
    LpaElement,
    basis_and_dimension,
    coordinates,
    from_coordinates,
    from_laurent,
    grade,
    laurent_realize,
)
from .scalars import FieldSpec, TestAlgebra, TestAlgebraElement, field_units


@dataclass(frozen=True)
class Certificate:
    """A yes/no answer; on "no", ``witness`` says why."""

    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


# ---------------------------------------------------------------------------
# finite-dimensional ideals
# ---------------------------------------------------------------------------

class IdealBasis:
    """Ideal of a finite-dimensional L_K(E), in reduced echelon form."""

    def __init__(self, graph: Graph, field: FieldSpec, basis):
        self.graph = graph
        self.field = field
        self.basis = tuple(basis)

    @cached_property
    def _monomials(self):
        return basis_and_dimension(self.graph).basis

    @cached_property
    def _index(self):
        return {m: i for i, m in enumerate(self._monomials)}

    @cached_property
    def _span(self) -> EchelonSpan:
        span = EchelonSpan(len(self._monomials), self.field)
        for b in self.basis:
            span.add(coordinates(b, self._index))
        return span

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, a: LpaElement) -> bool:
        return self._span.contains(coordinates(a, self._index))

    def __contains__(self, a):
        return self.contains(a)

    def __eq__(self, other):
        if not isinstance(other, IdealBasis):
            return NotImplemented
        return self.graph == other.graph and self.field == other.field and self.basis == other.basis

    def __hash__(self):
        return hash((self.graph, self.field, self.basis))

    def __repr__(self):
        return f"<IdealBasis dim={self.dim} of L_{self.field}({len(self.graph.vertices)} vertices)>"

    def to_json(self) -> list:
        return [b.to_json() for b in self.basis]


def _close(graph: Graph, field: FieldSpec, gens) -> IdealBasis:
    report = basis_and_dimension(graph)
    monos = report.basis
    index = {m: i for i, m in enumerate(monos)}
    span = EchelonSpan(len(monos), field)
    for g in gens:
        span.add(coordinates(g, index))
    mono_elems = [LpaElement(graph, field, {m: field.one}) for m in monos]
    # fixed point: multiply every basis vector by every basis monomial, both sides
    while True:
        current = [from_coordinates(graph, field, monos, v) for v in span.basis()]
        grew = False
        for b in current:
            for m in mono_elems:
                grew |= span.add(coordinates(m * b, index))
                grew |= span.add(coordinates(b * m, index))
        if not grew:
            break
    basis = [from_coordinates(graph, field, monos, v) for v in span.basis()]
    return IdealBasis(graph, field, basis)


def ideal_generated_by(gens, graph: Graph | None = None, field: FieldSpec | None = None) -> IdealBasis:
    """Smallest two-sided ideal containing ``gens`` (graph must be acyclic)."""
    gens = list(gens)
    if gens:
        graph, field = gens[0].graph, gens[0].field
    if graph is None or field is None:
        raise ValueError("the ambient graph and field are needed for an empty generating set")
    if not graph.is_acyclic:
        raise InfiniteDimensional("ideal closure needs a finite-dimensional algebra")
    return _close(graph, field, gens)


def close(ideal: IdealBasis) -> IdealBasis:
    return _close(ideal.graph, ideal.field, ideal.basis)


# ---------------------------------------------------------------------------
# ideals of K[x, 1/x]
# ---------------------------------------------------------------------------

def _shift_to_polynomial(p: TestAlgebraElement) -> list:
    """Coefficients (low to high) of x^-min(p) * p."""
    items = p.items()
    lo = items[0][0]
    hi = items[-1][0]
    K = p.field
    coeffs = [K.zero] * (hi - lo + 1)
    for e, c in items:
        coeffs[e - lo] = c
    return coeffs


def _poly_remainder(num: list, den: list, K: FieldSpec) -> list:
    num = list(num)
    lead_inv = K.inv(den[-1])
    d = len(den) - 1
    while len(num) - 1 >= d and any(num):
        if not num[-1]:
            num.pop()
            continue
        q = K.mul(num[-1], lead_inv)
        off = len(num) - 1 - d
        for i, c in enumerate(den):
            num[off + i] = K.sub(num[off + i], K.mul(q, c))
        num.pop()
    return num


class LaurentIdeal:
    """Principal ideal (p) of K[x, 1/x], kept by its canonical generator.

    The canonical generator is 0, or the monic polynomial with nonzero
    constant term associated to p (units are c x^k).
    """

    def __init__(self, generator: TestAlgebraElement):
        if generator.algebra.kind != "laurent":
            raise ValueError("Laurent ideals need a Laurent polynomial generator")
        K = generator.field
        self.algebra = generator.algebra
        self.field = K
        if generator.is_zero():
            self.generator = generator
        else:
            coeffs = _shift_to_polynomial(generator)
            lead = K.inv(coeffs[-1])
            self.generator = self.algebra.element({i: K.mul(lead, c) for i, c in enumerate(coeffs)})

    @property
    def graph(self) -> Graph:
        return loop_graph()

    def is_whole(self) -> bool:
        return self.generator == self.algebra.one

    def contains(self, q: TestAlgebraElement) -> bool:
        if q.is_zero():
            return True
        if self.generator.is_zero():
            return False
        rem = _poly_remainder(_shift_to_polynomial(q), _shift_to_polynomial(self.generator), self.field)
        return not any(rem)

    def contains_element(self, a: LpaElement) -> bool:
        return self.contains(laurent_realize(a))

    def __contains__(self, q):
        if isinstance(q, LpaElement):
            return self.contains_element(q)
        return self.contains(q)

    def __eq__(self, other):
        if not isinstance(other, LaurentIdeal):
            return NotImplemented
        return self.generator == other.generator

    def __hash__(self):
        return hash(self.generator)

    def __repr__(self):
        return f"LaurentIdeal({self.generator} over {self.field})"

    def to_json(self) -> dict:
        return {"field": self.field.name, "generator": self.generator.to_json()}


def laurent_ideal(coeffs: dict, field: FieldSpec) -> LaurentIdeal:
    return LaurentIdeal(TestAlgebra.laurent(field).element(coeffs))


def laurent_ideal_generated_by(polys, field: FieldSpec) -> LaurentIdeal:
    """(p_1, ..., p_k) = (gcd p_i) since K[x, 1/x] is a principal ideal domain."""
    g = None
    for p in polys:
        if p.is_zero():
            continue
        q = _shift_to_polynomial(p)
        if g is None:
            g = q
            continue
        a, b = g, q
        while any(b):
            r = _poly_remainder(a, b, field)
            while r and not r[-1]:
                r.pop()
            a, b = b, r
        g = a
    R = TestAlgebra.laurent(field)
    return LaurentIdeal(R.zero if g is None else R.element(dict(enumerate(g))))


def _elements(i):
    """Spanning elements (as LpaElements) and a membership test."""
    if isinstance(i, LaurentIdeal):
        g = loop_graph()
        return [from_laurent(g, i.generator)], i.contains_element
    return list(i.basis), i.contains


# ---------------------------------------------------------------------------
# gradedness and invariance
# ---------------------------------------------------------------------------

def is_graded_ideal(i) -> Certificate:
    """Every homogeneous component of every spanning element lies in the ideal.

    For a principal ideal of K[x, 1/x] it is enough to test the generator.
    """
    elems, member = _elements(i)
    for b in elems:
        for d, comp in grade(b).items():
            if not member(comp):
                return Certificate(False, (b, d))
    return Certificate(True)


def is_classically_invariant(i, bound: int | None = None) -> Certificate:
    """tau(z)(I) inside I for every unit z of K (sampled over Q)."""
    elems, member = _elements(i)
    for z in field_units(i.field, bound):
        for b in elems:
            if not member(classical_apply(b, z)):
                return Certificate(False, (b, z))
    return Certificate(True)


def is_schematically_invariant(i) -> Certificate:
    """rho_R(z)(I (x) 1) inside I (x) R, decided at the universal unit.

    rho(x)(b (x) 1) = sum_n b_n (x) x^n lies in I (x) K[x, 1/x] exactly when
    every coefficient b_n lies in I, because the powers of x are a basis of R.
    The answer is cross-checked against ``is_graded_ideal``.
    """
    elems, member = _elements(i)
    graph = elems[0].graph if elems else None
    verdict = Certificate(True)
    if graph is not None:
        action = GaugeAction(graph, i.field)
        x = action.universal()
        for b in elems:
            image = action.apply(x, Extended.lift(b, x.algebra))
            bad = [n for n in image.powers() if not member(image.coefficient_of_power(n))]
            if bad:
                verdict = Certificate(False, (b, bad[0]))
                break
    graded = is_graded_ideal(i)
    if graded.holds != verdict.holds:
        raise AssertionError("schematic invariance and gradedness disagree")
    return verdict


def vandermonde_split(b: LpaElement, units) -> dict[int, LpaElement]:
    """Recover the homogeneous components of ``b`` from tau(z_j)(b).

    With degrees in [lo, hi], tau(z_j)(b) = sum_n z_j^n b_n; solving this
    Vandermonde system needs hi - lo + 1 distinct nonzero z_j.
    """
    K = b.field
    if b.is_zero():
        return {}
    degs = b.degrees()
    lo, hi = degs[0], degs[-1]
    need = hi - lo + 1
    zs = []
    for z in units:
        z = K.norm(z.value if hasattr(z, "value") else z)
        if z and z not in zs:
            zs.append(z)
    if len(zs) < need:
        raise NotEnoughDistinctUnits(
            f"{need} distinct units needed for degrees {lo}..{hi}, only {len(zs)} available over {K}")
    zs = zs[:need]
    images = [classical_apply(b, z) for z in zs]
    monos = sorted({m for im in images for m in im.raw_terms()}, key=lambda m: m.sort_key)
    index = {m: k for k, m in enumerate(monos)}
    V = [[K.power(z, n) for n in range(lo, hi + 1)] for z in zs]
    Y = [coordinates(im, index) for im in images]
    X = solve_many(V, Y, K)
    if X is None:
        raise NotEnoughDistinctUnits("Vandermonde matrix is singular")
    out = {}
    for k, n in enumerate(range(lo, hi + 1)):
        comp = from_coordinates(b.graph, K, monos, X[k])
        if comp:
            out[n] = comp
    return out
