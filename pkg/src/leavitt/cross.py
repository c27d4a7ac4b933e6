"""Tensor products of Leavitt path algebras, the cross product by GL_1, and
the comparison map from the algebra of the product graph.

For gauge actions rho on A and sigma on B, GL_1 acts on A (x) B by
rho(z) (x) sigma(z^-1); its fixed subalgebra is the span of the pure tensors
a (x) b with deg a == deg b.  The canonical map

    phi: L_K(E x F) -> L_K(E) (x)_GL1 L_K(F),
         (u,v) -> u (x) v,  (f,g) -> f (x) g,  (f,g)* -> f* (x) g*

is checked to respect the relations, certified injective through the graded
uniqueness theorem (with an exact kernel computation as a second opinion)
and shown surjective by building preimages explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import (
    GraphMismatch,
    InfiniteDimensional,
    NotGraded,
    NotInCrossProduct,
    RelationViolation,
    VertexKilled,
)
from .gauge import Extended, GaugeAction
from .graph import Graph, Path, product_graph
from .linalg import rank
from .lpa import (
    LpaElement,
    Monomial,
    basis_and_dimension,
    edge,
    ghost,
    multiply_monomials,
    normal_monomials,
    vertex,
)
from .scalars import FieldSpec, Scalar, TestAlgebra, TestAlgebraElement


# ---------------------------------------------------------------------------
# A (x) B
# ---------------------------------------------------------------------------

class TensorElement:
    """Element of L_K(E) (x) L_K(F): (monomial, monomial) -> raw coefficient."""

    __slots__ = ("left", "right", "field", "_terms", "_hash")

    def __init__(self, left: Graph, right: Graph, field: FieldSpec, terms: dict | None = None):
        self.left = left
        self.right = right
        self.field = field
        self._terms = {k: c for k, c in (terms or {}).items() if c}
        self._hash = None

    def _same(self, other):
        if (other.left, other.right) != (self.left, self.right):
            raise GraphMismatch("tensor factors differ")

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0].sort_key, kv[0][1].sort_key))

    def raw_terms(self) -> dict:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._same(other)
        K = self.field
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = K.add(out.get(k, K.zero), c)
        return TensorElement(self.left, self.right, K, out)

    def __neg__(self):
        K = self.field
        return TensorElement(self.left, self.right, K, {k: K.neg(c) for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        K = self.field
        c = K.norm(c.value if isinstance(c, Scalar) else c)
        return TensorElement(self.left, self.right, K, {k: K.mul(c, v) for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._same(other)
        K = self.field
        out: dict = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                left = multiply_monomials(self.left, a1, a2)
                if not left:
                    continue
                right = multiply_monomials(self.right, b1, b2)
                c = K.mul(c1, c2)
                for ma, sa in left:
                    for mb, sb in right:
                        key = (ma, mb)
                        out[key] = K.add(out.get(key, K.zero), K.mul(c, K.norm(sa * sb)))
        return TensorElement(self.left, self.right, K, out)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.left, self.right, self.field) == (other.left, other.right, other.field) \
            and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.left, self.right, self.field, frozenset(self._terms.items())))
        return self._hash

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(a.degree, b.degree) for a, b in self._terms}

    def is_degree_matched(self) -> bool:
        return all(a.degree == b.degree for a, b in self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in self.items():
            cs = self.field.format(c)
            t = f"{a} (x) {b}"
            parts.append(t if cs == "1" else f"{cs}*({t})")
        return " + ".join(parts)

    def __repr__(self):
        return f"<TensorElement {self}>"

    def to_json(self) -> list:
        return [{"left": a.to_json(), "right": b.to_json(), "coeff": self.field.format(c)}
                for (a, b), c in self.items()]


def tensor(a: LpaElement, b: LpaElement) -> TensorElement:
    if a.field != b.field:
        raise ValueError("tensor factors must share a field")
    K = a.field
    out = {}
    for ma, ca in a.raw_terms().items():
        for mb, cb in b.raw_terms().items():
            out[(ma, mb)] = K.mul(ca, cb)
    return TensorElement(a.graph, b.graph, K, out)


def pure(left: Graph, right: Graph, field: FieldSpec, a: Monomial, b: Monomial, c=1) -> TensorElement:
    return TensorElement(left, right, field, {(a, b): field.norm(c)})


# ---------------------------------------------------------------------------
# (A (x) B) (x) R and the tensor product action
# ---------------------------------------------------------------------------

class TensorR:
    """Element of (A (x) B) (x) R: (monomial, monomial) -> element of R."""

    __slots__ = ("left", "right", "algebra", "_terms")

    def __init__(self, left: Graph, right: Graph, algebra: TestAlgebra, terms: dict | None = None):
        self.left = left
        self.right = right
        self.algebra = algebra
        self._terms = {k: r for k, r in (terms or {}).items() if r}

    @classmethod
    def lift(cls, t: TensorElement, R: TestAlgebra, r: TestAlgebraElement | None = None) -> "TensorR":
        r = R.one if r is None else r
        return cls(t.left, t.right, R, {k: r.scale(c) for k, c in t.raw_terms().items()})

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0].sort_key, kv[0][1].sort_key))

    def coefficient_of_power(self, n: int) -> TensorElement:
        return TensorElement(self.left, self.right, self.algebra.field,
                             {k: r.coefficient(n) for k, r in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorR):
            return NotImplemented
        return (self.left, self.right, self.algebra) == (other.left, other.right, other.algebra) \
            and self._terms == other._terms

    def __hash__(self):
        return hash((self.left, self.right, self.algebra, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({a} (x) {b}) (x) [{r}]" for (a, b), r in self.items())

    __repr__ = __str__


def tensor_action_apply(rho: GaugeAction, sigma: GaugeAction, z: TestAlgebraElement, t: TensorR) -> TensorR:
    """(rho (x) sigma)_R(z) = (1 (x) mu) theta^-1 (rho_R(z) (x) sigma_R(z^-1)) theta (1 (x) delta).

    Each of the five maps is carried out on an explicit representation:
    A (x) B (x) R (x) R and A_R (x) B_R are stored as dictionaries keyed by
    monomials and exponent pairs of the basis x^i (x) x^j of R (x) R.
    """
    R = t.algebra
    if (t.left, t.right) != (rho.graph, sigma.graph):
        raise GraphMismatch("actions and tensor live over different graphs")
    rho.group.check_point(z)
    z_inv = z.inverse()
    K = R.field
    red = R.reduce_exponent

    # 1 (x) delta:  a (x) b (x) r  ->  a (x) b (x) r (x) 1
    abrr = {}
    for (a, b), r in t._terms.items():
        for e, c in r.items():
            abrr[(a, b, e, 0)] = c

    # theta:  a (x) b (x) r (x) r'  ->  (a (x) r) (x) (b (x) r')
    arbr = {(a, e1, b, e2): c for (a, b, e1, e2), c in abrr.items()}

    # rho_R(z) (x) sigma_R(z^-1), factor by factor
    acted: dict = {}
    for (a, e1, b, e2), c in arbr.items():
        left = rho.apply(z, Extended(rho.graph, R, {a: R.monomial(e1)}))
        right = sigma.apply(z_inv, Extended(sigma.graph, R, {b: R.monomial(e2)}))
        for a2, ra in left.items():
            for b2, rb in right.items():
                for f1, ca in ra.items():
                    for f2, cb in rb.items():
                        key = (a2, f1, b2, f2)
                        acted[key] = K.add(acted.get(key, K.zero), K.mul(c, K.mul(ca, cb)))

    # theta^-1
    back = {(a, b, e1, e2): c for (a, e1, b, e2), c in acted.items() if c}

    # 1 (x) mu:  r (x) r' -> r r'
    out: dict = {}
    for (a, b, e1, e2), c in back.items():
        piece = R.monomial(red(e1 + e2), c)
        out[(a, b)] = out[(a, b)] + piece if (a, b) in out else piece
    return TensorR(t.left, t.right, R, out)


def tensor_action_shortcut(z: TestAlgebraElement, t: TensorR) -> TensorR:
    """Net effect of the tensor product action: multiply by z^(deg a - deg b)."""
    return TensorR(t.left, t.right, t.algebra,
                   {(a, b): (z ** (a.degree - b.degree)) * r for (a, b), r in t._terms.items()})


# ---------------------------------------------------------------------------
# the cross product
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CrossProductSpace:
    left: Graph
    right: Graph
    field: FieldSpec
    degree_bound: int | None  # None: exact (both factors acyclic)
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_exact(self) -> bool:
        return self.degree_bound is None

    def degree_dimensions(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for t in self.basis:
            ((a, _),) = t.raw_terms()
            out[a.degree] = out.get(a.degree, 0) + 1
        return dict(sorted(out.items()))


def _factor_monomials(g: Graph, bound: int | None):
    if bound is None:
        if not g.is_acyclic:
            raise InfiniteDimensional("a factor has a cycle; pass degree_bound")
        return list(basis_and_dimension(g).basis)
    return normal_monomials(g, bound)


def fixed_subalgebra(rho: GaugeAction, sigma: GaugeAction, degree_bound: int | None = None) -> CrossProductSpace:
    """Basis of (A (x) B)^(rho (x) sigma), truncated at ``degree_bound``.

    Every candidate a (x) b is pushed through the tensor action at the
    universal unit; the fixed ones must be exactly the degree-matched ones.
    """
    if rho.field != sigma.field:
        raise ValueError("actions must share a field")
    K = rho.field
    A = _factor_monomials(rho.graph, degree_bound)
    B = _factor_monomials(sigma.graph, degree_bound)
    R = TestAlgebra.laurent(K)
    x = R.x
    basis = []
    for a in A:
        for b in B:
            t = TensorR(rho.graph, sigma.graph, R, {(a, b): R.one})
            fixed = tensor_action_apply(rho, sigma, x, t) == t
            if fixed != (a.degree == b.degree):
                raise AssertionError(f"fixed points of the tensor action are not degree-matched at {a} (x) {b}")
            if fixed:
                basis.append(pure(rho.graph, sigma.graph, K, a, b))
    return CrossProductSpace(rho.graph, sigma.graph, K, degree_bound, tuple(basis))


def cross_product(left: Graph, right: Graph, field: FieldSpec, degree_bound: int | None = None) -> CrossProductSpace:
    return fixed_subalgebra(GaugeAction(left, field), GaugeAction(right, field), degree_bound)


def naive_tensor_dimension(left: Graph, right: Graph, degree_bound: int | None = None) -> int:
    """dim A (x) B, the answer a trivial action would give."""
    return len(_factor_monomials(left, degree_bound)) * len(_factor_monomials(right, degree_bound))


def cross_grading(t: TensorElement) -> dict[int, TensorElement]:
    """Grading of the cross product: a (x) b with deg a = deg b = n sits in degree n."""
    parts: dict[int, dict] = {}
    for (a, b), c in t.raw_terms().items():
        if a.degree != b.degree:
            raise NotInCrossProduct(f"{a} (x) {b} has degrees {a.degree} != {b.degree}")
        parts.setdefault(a.degree, {})[(a, b)] = c
    return {n: TensorElement(t.left, t.right, t.field, parts[n]) for n in sorted(parts)}


# ---------------------------------------------------------------------------
# the comparison map phi
# ---------------------------------------------------------------------------

DEGREE_OF_KIND = {"vertex": 0, "edge": 1, "ghost": -1}


@dataclass
class GeneratorMap:
    """Images of the vertices, edges and ghost edges of ``domain``."""

    domain: Graph
    left: Graph
    right: Graph
    field: FieldSpec
    images: dict  # (kind, id) -> TensorElement
    _relations: list | None = field(default=None, repr=False)

    def image(self, kind: str, ident: str) -> TensorElement:
        return self.images[(kind, ident)]

    def relation_defects(self) -> list[str]:
        """Relations of L_K(domain) that the images fail; computed once."""
        if self._relations is None:
            self._relations = _check_relations(self)
        return self._relations

    @cached_property
    def zero(self) -> TensorElement:
        return TensorElement(self.left, self.right, self.field)


def canonical_generator_map(e: Graph, f: Graph, field: FieldSpec) -> GeneratorMap:
    dom = product_graph(e, f)
    K = field
    images = {}
    for v in dom.vertices:
        a, b = dom.factor_of[v]
        images[("vertex", v)] = tensor(vertex(e, K, a), vertex(f, K, b))
    for x in dom.edges:
        a, b = dom.factor_of[x.id]
        images[("edge", x.id)] = tensor(edge(e, K, a), edge(f, K, b))
        images[("ghost", x.id)] = tensor(ghost(e, K, a), ghost(f, K, b))
    return GeneratorMap(dom, e, f, K, images)


def _check_relations(m: GeneratorMap) -> list[str]:
    g = m.domain
    V = {v: m.image("vertex", v) for v in g.vertices}
    Ed = {x.id: m.image("edge", x.id) for x in g.edges}
    Gh = {x.id: m.image("ghost", x.id) for x in g.edges}
    zero = m.zero
    bad = []
    for v in g.vertices:
        for w in g.vertices:
            want = V[v] if v == w else zero
            if V[v] * V[w] != want:
                bad.append(f"vertex {v}{w}")
    for x in g.edges:
        e, s, r = x.id, x.src, x.rng
        if V[s] * Ed[e] != Ed[e] or Ed[e] * V[r] != Ed[e]:
            bad.append(f"s(e) e = e = e r(e) at {e}")
        if V[r] * Gh[e] != Gh[e] or Gh[e] * V[s] != Gh[e]:
            bad.append(f"r(e) e* = e* = e* s(e) at {e}")
        for y in g.edges:
            want = V[r] if y.id == e else zero
            if Gh[e] * Ed[y.id] != want:
                bad.append(f"CK1 at {e}*{y.id}")
    for v in g.vertices:
        es = g.emitted[v]
        if es:
            total = zero
            for e in es:
                total = total + Ed[e] * Gh[e]
            if total != V[v]:
                bad.append(f"CK2 at {v}")
    return bad


def _path_image(m: GeneratorMap, p: Path, kind: str) -> TensorElement:
    if not p.edges:
        return m.image("vertex", p.source)
    seq = p.edges if kind == "edge" else tuple(reversed(p.edges))
    out = m.image(kind, seq[0])
    for x in seq[1:]:
        out = out * m.image(kind, x)
    return out


def monomial_image(m: GeneratorMap, mono: Monomial) -> TensorElement:
    if not mono.mu.edges and not mono.nu.edges:
        return m.image("vertex", mono.mu.source)
    if not mono.nu.edges:
        return _path_image(m, mono.mu, "edge")
    if not mono.mu.edges:
        return _path_image(m, mono.nu, "ghost")
    return _path_image(m, mono.mu, "edge") * _path_image(m, mono.nu, "ghost")


def phi_apply(m: GeneratorMap, a: LpaElement) -> TensorElement:
    """Linear, multiplicative extension of the generator images."""
    if a.graph != m.domain:
        raise GraphMismatch("element is not over the domain graph")
    defects = m.relation_defects()
    if defects:
        raise RelationViolation(defects)
    out = m.zero
    for mono, c in a.raw_terms().items():
        out = out + monomial_image(m, mono).scale(c)
    return out


# ---------------------------------------------------------------------------
# injectivity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InjectivityCertificate:
    vertices_nonzero: bool
    graded: bool
    relations_hold: bool
    bound: int | None
    domain_monomials: int
    kernel_dim: int

    @property
    def theorem_route(self) -> bool:
        return self.vertices_nonzero and self.graded and self.relations_hold

    @property
    def linear_algebra_route(self) -> bool:
        return self.kernel_dim == 0

    @property
    def injective(self) -> bool:
        return self.theorem_route and self.linear_algebra_route

    @property
    def agrees(self) -> bool:
        return self.theorem_route == self.linear_algebra_route

    def to_json(self) -> dict:
        return {
            "rule": "graded homomorphism killing no vertex is injective",
            "vertices_nonzero": self.vertices_nonzero,
            "graded": self.graded,
            "relations_hold": self.relations_hold,
            "bound": self.bound,
            "domain_monomials": self.domain_monomials,
            "kernel_dim": self.kernel_dim,
            "injective": self.injective,
        }


def _domain_monomials(g: Graph, bound: int | None):
    if g.is_acyclic and bound is None:
        return list(basis_and_dimension(g).basis)
    if bound is None:
        raise InfiniteDimensional("domain is infinite-dimensional; pass a bound")
    return normal_monomials(g, bound)


def kernel_dimension(m: GeneratorMap, bound: int | None = None) -> tuple[int, int]:
    """(number of domain monomials, dimension of the kernel on their span)."""
    monos = _domain_monomials(m.domain, bound)
    images = [monomial_image(m, mono) for mono in monos]
    keys = sorted({k for im in images for k in im.raw_terms()},
                  key=lambda k: (k[0].sort_key, k[1].sort_key))
    index = {k: i for i, k in enumerate(keys)}
    K = m.field
    rows = []
    for im in images:
        row = [K.zero] * len(keys)
        for k, c in im.raw_terms().items():
            row[index[k]] = c
        rows.append(row)
    r = rank(rows, K) if keys else 0
    return len(monos), len(monos) - r


def certify_injective(m: GeneratorMap, bound: int | None = None) -> InjectivityCertificate:
    """Check the hypotheses of graded uniqueness, then confirm by linear algebra.

    Raises VertexKilled or NotGraded when a hypothesis fails, and
    RelationViolation when the images do not define a homomorphism.
    """
    g = m.domain
    for v in g.vertices:
        if not m.image("vertex", v):
            raise VertexKilled(v)
    for (kind, ident), im in sorted(m.images.items()):
        want = DEGREE_OF_KIND[kind]
        try:
            parts = cross_grading(im)
        except NotInCrossProduct as exc:
            raise NotGraded(f"{kind} {ident}", str(exc)) from None
        if set(parts) - {want}:
            raise NotGraded(f"{kind} {ident}", f"degrees {sorted(parts)} instead of {want}")
    defects = m.relation_defects()
    if defects:
        raise RelationViolation(defects)
    count, kernel = kernel_dimension(m, bound)
    return InjectivityCertificate(True, True, True, bound, count, kernel)


# ---------------------------------------------------------------------------
# surjectivity: explicit preimages
# ---------------------------------------------------------------------------

class _SinkReached(Exception):
    def __init__(self, side, vertex):
        self.side = side
        self.vertex = vertex


def _pair_path(m: GeneratorMap, p: Path, q: Path) -> LpaElement:
    """The path of E x F whose projections are p and q (same length)."""
    dom = m.domain
    K = m.field
    if not p.edges:
        return vertex(dom, K, dom.id_of_pair[(p.source, q.source)])
    ids = [dom.id_of_pair[(a, b)] for a, b in zip(p.edges, q.edges)]
    return LpaElement(dom, K, {Monomial(dom.path(ids), Path(dom.r(ids[-1]))): K.one})


def _left_block(m: GeneratorMap, mu: Path, tau: Path, u: str) -> LpaElement:
    """Preimage of mu tau* (x) u with |mu| = |tau|, expanding u by CK2 in F."""
    dom, K = m.domain, m.field
    if not mu.edges:
        return vertex(dom, K, dom.id_of_pair[(mu.source, u)])
    gs = m.right.emitted[u]
    if not gs:
        raise _SinkReached("right", u)
    f, h = mu.edges[0], tau.edges[0]
    _, mu1 = m.left.truncate(mu, 1)
    _, tau1 = m.left.truncate(tau, 1)
    # the recursion must strictly shorten both paths
    assert len(mu1.edges) == len(mu.edges) - 1 and len(tau1.edges) == len(tau.edges) - 1
    out = LpaElement(dom, K)
    for g in gs:
        inner = _left_block(m, mu1, tau1, m.right.r(g))
        fg = dom.id_of_pair[(f, g)]
        hg = dom.id_of_pair[(h, g)]
        out = out + edge(dom, K, fg) * inner * ghost(dom, K, hg)
    return out


def _right_block(m: GeneratorMap, v: str, sigma: Path, delta: Path) -> LpaElement:
    """Preimage of v (x) sigma delta* with |sigma| = |delta|, expanding v by CK2 in E."""
    dom, K = m.domain, m.field
    if not sigma.edges:
        return vertex(dom, K, dom.id_of_pair[(v, sigma.source)])
    es = m.left.emitted[v]
    if not es:
        raise _SinkReached("left", v)
    g, h = sigma.edges[0], delta.edges[0]
    _, s1 = m.right.truncate(sigma, 1)
    _, d1 = m.right.truncate(delta, 1)
    assert len(s1.edges) == len(sigma.edges) - 1 and len(d1.edges) == len(delta.edges) - 1
    out = LpaElement(dom, K)
    for e in es:
        inner = _right_block(m, m.left.r(e), s1, d1)
        out = out + edge(dom, K, dom.id_of_pair[(e, g)]) * inner * ghost(dom, K, dom.id_of_pair[(e, h)])
    return out


def preimage_of_pure(m: GeneratorMap, mu: Path, tau: Path, sigma: Path, delta: Path) -> LpaElement:
    """A preimage of mu tau* (x) sigma delta* (deg mu tau* = deg sigma delta*).

    The element factors as (paired paths) (middle block) (paired ghosts),
    where the middle block is mu' tau'* (x) u or v (x) sigma' delta'*.
    Raises _SinkReached when the recursion meets a sink.
    """
    if len(mu) - len(tau) != len(sigma) - len(delta):
        raise NotInCrossProduct("degrees differ")
    E, F = m.left, m.right
    if len(mu) >= len(sigma):
        mu1, mu2 = E.truncate(mu, len(sigma))
        tau1, tau2 = E.truncate(tau, len(delta))
        head = _pair_path(m, mu1, sigma)
        tail = _pair_path(m, tau1, delta).star()
        middle = _left_block(m, mu2, tau2, sigma.target)
    else:
        s1, s2 = F.truncate(sigma, len(mu))
        d1, d2 = F.truncate(delta, len(tau))
        head = _pair_path(m, mu, s1)
        tail = _pair_path(m, tau, d1).star()
        middle = _right_block(m, mu.target, s2, d2)
    return head * middle * tail


def preimage(m: GeneratorMap, t: TensorElement) -> LpaElement:
    """Preimage of a degree-matched tensor, term by term."""
    out = LpaElement(m.domain, m.field)
    for (a, b), c in t.raw_terms().items():
        out = out + preimage_of_pure(m, a.mu, a.nu, b.mu, b.nu).scale(c)
    return out


@dataclass(frozen=True)
class SurjectivityReport:
    bound: int | None
    sinks_left: tuple
    sinks_right: tuple
    checked: int
    unreached: tuple

    @property
    def hypothesis_ok(self) -> bool:
        return not self.sinks_left and not self.sinks_right

    @property
    def surjective(self) -> bool:
        return not self.unreached

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "hypothesis_ok": self.hypothesis_ok,
            "sinks": {"left": list(self.sinks_left), "right": list(self.sinks_right)},
            "checked": self.checked,
            "unreached": list(self.unreached),
        }


def verify_surjective(m: GeneratorMap, degree_bound: int | None = None) -> SurjectivityReport:
    """Build and check a preimage for every cross-product basis element.

    With sinks in either factor the recursion may get stuck; such elements
    are listed as unreached and the report is only advisory.
    """
    space = cross_product(m.left, m.right, m.field, degree_bound)
    unreached = []
    for t in space.basis:
        try:
            pre = preimage(m, t)
        except _SinkReached as exc:
            unreached.append(f"{t} (sink {exc.vertex} in the {exc.side} factor)")
            continue
        if phi_apply(m, pre) != t:
            unreached.append(f"{t} (preimage does not map back)")
    return SurjectivityReport(
        degree_bound,
        tuple(sorted(m.left.sinks)),
        tuple(sorted(m.right.sinks)),
        space.dim,
        tuple(unreached),
    )


# ---------------------------------------------------------------------------
# the isomorphism
# ---------------------------------------------------------------------------

PROVEN_EXACTLY = "proven-exactly"
PROVEN_AT_BOUND = "proven-at-bound"
HYPOTHESIS_FAILED = "hypothesis-failed"
REFUTED = "refuted"


@dataclass(frozen=True)
class IsoVerdict:
    verdict: str
    injective: InjectivityCertificate | None
    surjective: SurjectivityReport | None
    dimensions: dict
    notes: tuple = ()

    @property
    def ok(self) -> bool:
        return self.verdict in (PROVEN_EXACTLY, PROVEN_AT_BOUND)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "injective": self.injective.to_json() if self.injective else None,
            "surjective": self.surjective.to_json() if self.surjective else None,
            "dimensions": self.dimensions,
            "notes": list(self.notes),
        }


def verify_iso(e: Graph, f: Graph, field: FieldSpec, degree_bound: int | None = None,
               naive: bool = False) -> IsoVerdict:
    """Compare L_K(E x F) with L_K(E) (x)_GL1 L_K(F).

    ``naive=True`` compares against the full tensor product instead, which is
    what a trivial gauge action would produce.
    """
    exact = e.is_acyclic and f.is_acyclic
    bound = None if exact else degree_bound
    if not exact and bound is None:
        raise InfiniteDimensional("a factor has a cycle; pass degree_bound")
    m = canonical_generator_map(e, f, field)
    notes = []

    domain_dim = len(_domain_monomials(m.domain, bound))
    target_dim = naive_tensor_dimension(e, f, bound) if naive else cross_product(e, f, field, bound).dim
    dims = {"domain": domain_dim, "target": target_dim,
            "target_kind": "tensor" if naive else "cross", "bound": bound}
    if naive:
        if domain_dim != target_dim:
            notes.append(f"dimension mismatch {domain_dim} != {target_dim}")
            return IsoVerdict(REFUTED, None, None, dims, tuple(notes))
        return IsoVerdict(PROVEN_EXACTLY if exact else PROVEN_AT_BOUND, None, None, dims,
                          ("dimensions agree; no map was checked",))

    inj = certify_injective(m, bound)
    surj = verify_surjective(m, bound)
    if not surj.hypothesis_ok:
        notes.append("a factor has sinks; the surjectivity argument does not apply and the "
                     "result rests on the explicit computation only")
    if not inj.agrees:
        notes.append("theorem route and kernel computation disagree")
    # truncations of the two sides need not have equal size, so only exact
    # dimensions are compared
    dims_ok = domain_dim == target_dim if exact else True
    if not dims_ok:
        notes.append(f"dimension mismatch {domain_dim} != {target_dim}")

    if not (inj.injective and surj.surjective and dims_ok):
        verdict = REFUTED
    elif exact:
        verdict = PROVEN_EXACTLY
    elif not surj.hypothesis_ok:
        verdict = HYPOTHESIS_FAILED
    else:
        verdict = PROVEN_AT_BOUND
    return IsoVerdict(verdict, inj, surj, dims, tuple(notes))
