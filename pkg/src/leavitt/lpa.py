"""Leavitt path algebras L_K(E) of finite graphs, in normal form.

Every element is a finite combination of monomials mu nu* with
r(mu) == r(nu).  The relations used are the usual ones: vertices are
orthogonal idempotents, s(f) f = f = f r(f), f* g = delta_{f,g} r(f), and at
each regular vertex v, v = sum of e e* over the edges e leaving v.

The last relation is oriented as a rewrite of the *special* edge gamma(v),
the first edge v emits in file order:

    gamma gamma*  ->  v - sum_{e != gamma, s(e) = v} e e*

so a monomial is in normal form unless mu and nu both end in the same special
edge.  These monomials form a basis of the algebra.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatch, GraphMismatch, InfiniteDimensional, NotLoopGraph, ParseError, UnknownId
from .graph import Graph, Path, enumerate_paths
from .scalars import FieldSpec, Scalar, TestAlgebra, TestAlgebraElement


@dataclass(frozen=True)
class Monomial:
    """mu nu* with r(mu) == r(nu)."""

    mu: Path
    nu: Path

    def __post_init__(self):
        if self.mu.target != self.nu.target:
            raise ValueError(f"r({self.mu}) != r({self.nu})")

    @property
    def degree(self) -> int:
        return len(self.mu.edges) - len(self.nu.edges)

    @property
    def sort_key(self):
        return (self.degree, len(self.mu.edges), self.mu.edges, self.nu.edges,
                self.mu.source, self.nu.source)

    def star(self) -> "Monomial":
        return Monomial(self.nu, self.mu)

    def is_normal(self, graph: Graph) -> bool:
        if not self.mu.edges or not self.nu.edges:
            return True
        e = self.mu.edges[-1]
        return not (e == self.nu.edges[-1] and graph.special.get(graph.s(e)) == e)

    def __str__(self):
        if not self.mu.edges and not self.nu.edges:
            return self.mu.source
        parts = list(self.mu.edges) + [g + "*" for g in reversed(self.nu.edges)]
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"mu": list(self.mu.edges), "mu_base": self.mu.source,
                "nu": list(self.nu.edges), "nu_base": self.nu.source}


def vertex_monomial(v: str) -> Monomial:
    p = Path(v)
    return Monomial(p, p)


# ---------------------------------------------------------------------------
# monomial arithmetic (coefficients are small integers, reduced later)
# ---------------------------------------------------------------------------

def normalize(graph: Graph, mu: Path, nu: Path) -> list[tuple[Monomial, int]]:
    """Rewrite mu nu* into a signed sum of normal monomials."""
    out = []
    sign = 1
    while mu.edges and nu.edges:
        e = mu.edges[-1]
        if e != nu.edges[-1]:
            break
        v = graph.s(e)
        if graph.special.get(v) != e:
            break
        alpha, _ = graph.truncate(mu, len(mu.edges) - 1)
        beta, _ = graph.truncate(nu, len(nu.edges) - 1)
        for f in graph.emitted[v]:
            if f != e:
                out.append((Monomial(graph.extend(alpha, (f,)), graph.extend(beta, (f,))), -sign))
        mu, nu = alpha, beta
    out.append((Monomial(mu, nu), sign))
    return out


@lru_cache(maxsize=200_000)
def multiply_monomials(graph: Graph, a: Monomial, b: Monomial) -> tuple[tuple[Monomial, int], ...]:
    """(mu nu*)(sigma tau*) as a signed sum of normal monomials."""
    mu, nu, sigma, tau = a.mu, a.nu, b.mu, b.nu
    if nu.is_prefix_of(sigma):
        rest = sigma.edges[len(nu.edges):]
        return tuple(normalize(graph, graph.extend(mu, rest), tau))
    if sigma.is_prefix_of(nu):
        rest = nu.edges[len(sigma.edges):]
        return tuple(normalize(graph, mu, graph.extend(tau, rest)))
    return ()


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class LpaElement:
    """An element of L_K(E): normal monomial -> nonzero raw coefficient."""

    __slots__ = ("graph", "field", "_terms", "_hash")

    def __init__(self, graph: Graph, field: FieldSpec, terms: dict | None = None):
        self.graph = graph
        self.field = field
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # construction helpers --------------------------------------------------

    @classmethod
    def from_monomial(cls, graph, field, mu: Path, nu: Path, coeff=1) -> "LpaElement":
        """Any mu nu* (normal or not), reduced to normal form."""
        if mu.target != nu.target:
            return cls(graph, field)
        out: dict = {}
        c = field.norm(coeff)
        for m, s in normalize(graph, mu, nu):
            out[m] = field.add(out.get(m, field.zero), field.mul(c, field.norm(s)))
        return cls(graph, field, out)

    def _same(self, other: "LpaElement"):
        if other.graph != self.graph:
            raise GraphMismatch("elements live over different graphs")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    # accessors ----------------------------------------------------------------

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key)

    def monomials(self):
        return [m for m, _ in self.items()]

    def coefficient(self, m: Monomial) -> Scalar:
        return Scalar(self._terms.get(m, self.field.zero), self.field)

    def raw_terms(self) -> dict:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> list[int]:
        return sorted({m.degree for m in self._terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    # arithmetic ---------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LpaElement):
            return NotImplemented
        self._same(other)
        K = self.field
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = K.add(out.get(m, K.zero), c)
        return LpaElement(self.graph, K, out)

    def __neg__(self):
        K = self.field
        return LpaElement(self.graph, K, {m: K.neg(c) for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LpaElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "LpaElement":
        K = self.field
        if isinstance(c, Scalar):
            if c.field != K:
                raise FieldMismatch(f"{c.field} vs {K}")
            c = c.value
        c = K.norm(c)
        return LpaElement(self.graph, K, {m: K.mul(c, v) for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if not isinstance(other, LpaElement):
            return NotImplemented
        self._same(other)
        K = self.field
        g = self.graph
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                c = K.mul(c1, c2)
                for m, s in multiply_monomials(g, m1, m2):
                    out[m] = K.add(out.get(m, K.zero), c if s == 1 else K.mul(c, K.norm(s)))
        return LpaElement(g, K, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def star(self) -> "LpaElement":
        """The involution: (mu nu*)* = nu mu*, coefficients fixed."""
        return LpaElement(self.graph, self.field, {m.star(): c for m, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LpaElement):
            return NotImplemented
        return (self.graph == other.graph and self.field == other.field
                and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.graph, self.field, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            cs = self.field.format(c)
            parts.append(str(m) if cs == "1" else f"{cs}*({m})" if " " in str(m) else f"{cs}*{m}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<LpaElement {self} over {self.field}>"

    # serialization ------------------------------------------------------------

    def to_json(self) -> list:
        return [dict(m.to_json(), coeff=self.field.format(c)) for m, c in self.items()]

    @classmethod
    def from_json(cls, graph: Graph, field: FieldSpec, data) -> "LpaElement":
        if not isinstance(data, list):
            raise ParseError("an element is a list of terms")
        out = cls(graph, field)
        for term in data:
            if not isinstance(term, dict) or set(term) != {"mu", "mu_base", "nu", "nu_base", "coeff"}:
                raise ParseError(f"bad term {term!r}")
            try:
                mu = graph.path(term["mu"], term["mu_base"])
                nu = graph.path(term["nu"], term["nu_base"])
            except (UnknownId, ValueError) as exc:
                raise ParseError(str(exc)) from None
            if mu.target != nu.target:
                raise ParseError(f"r(mu) != r(nu) in {term!r}")
            out = out + cls.from_monomial(graph, field, mu, nu, field.parse_value(term["coeff"]))
        return out


def zero(graph: Graph, field: FieldSpec) -> LpaElement:
    return LpaElement(graph, field)


def vertex(graph: Graph, field: FieldSpec, v: str) -> LpaElement:
    graph.vertex_path(v)
    return LpaElement(graph, field, {vertex_monomial(v): field.one})


def edge(graph: Graph, field: FieldSpec, e: str) -> LpaElement:
    p = graph.path((e,))
    return LpaElement(graph, field, {Monomial(p, Path(p.target)): field.one})


def ghost(graph: Graph, field: FieldSpec, e: str) -> LpaElement:
    p = graph.path((e,))
    return LpaElement(graph, field, {Monomial(Path(p.target), p): field.one})


def generator(graph: Graph, field: FieldSpec, kind: str, ident: str) -> LpaElement:
    """``kind`` is ``"vertex"``, ``"edge"`` or ``"ghost"``."""
    try:
        return {"vertex": vertex, "edge": edge, "ghost": ghost}[kind](graph, field, ident)
    except KeyError as exc:
        if isinstance(exc, UnknownId):
            raise
        raise ValueError(f"unknown generator kind {kind!r}") from None


def path_element(graph: Graph, field: FieldSpec, p: Path) -> LpaElement:
    return LpaElement(graph, field, {Monomial(p, Path(p.target)): field.one})


def unit(graph: Graph, field: FieldSpec) -> LpaElement:
    """Sum of all vertices: the identity of L_K(E) for a finite graph."""
    return LpaElement(graph, field, {vertex_monomial(v): field.one for v in graph.vertices})


def multiply(a: LpaElement, b: LpaElement) -> LpaElement:
    return a * b


def involution(a: LpaElement) -> LpaElement:
    return a.star()


# ---------------------------------------------------------------------------
# grading
# ---------------------------------------------------------------------------

def grade(a: LpaElement) -> dict[int, LpaElement]:
    """Homogeneous components by degree |mu| - |nu|; zero components omitted."""
    parts: dict[int, dict] = {}
    for m, c in a.raw_terms().items():
        parts.setdefault(m.degree, {})[m] = c
    return {d: LpaElement(a.graph, a.field, parts[d]) for d in sorted(parts)}


def coarsen(decomposition: dict[int, LpaElement], n: int) -> dict[int, LpaElement]:
    """Z_n-grading: sum the components whose degrees agree mod n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out: dict[int, LpaElement] = {}
    for d, comp in decomposition.items():
        i = d % n
        out[i] = out[i] + comp if i in out else comp
    return {i: c for i, c in sorted(out.items()) if c}


# ---------------------------------------------------------------------------
# bases
# ---------------------------------------------------------------------------

def normal_monomials(graph: Graph, max_length: int | None = None) -> list[Monomial]:
    """Normal monomials mu nu* with |mu|, |nu| <= max_length.

    With ``max_length=None`` the graph must be acyclic and all of them are
    returned.
    """
    if max_length is None:
        if not graph.is_acyclic:
            raise InfiniteDimensional("graph has a cycle; pass max_length")
        max_length = len(graph.vertices)
    by_target: dict[str, list[Path]] = {}
    for p in enumerate_paths(graph, max_length):
        by_target.setdefault(p.target, []).append(p)
    out = []
    for w in graph.vertices:
        for mu in by_target.get(w, ()):
            for nu in by_target.get(w, ()):
                m = Monomial(mu, nu)
                if m.is_normal(graph):
                    out.append(m)
    out.sort(key=lambda m: m.sort_key)
    return out


@dataclass(frozen=True)
class BasisReport:
    basis: tuple[Monomial, ...]
    dim: int
    sink_formula_dim: int

    @property
    def consistent(self) -> bool:
        return self.dim == self.sink_formula_dim


def basis_and_dimension(graph: Graph, field: FieldSpec | None = None) -> BasisReport:
    """Normal-monomial basis of a finite-dimensional L_K(E).

    The dimension is cross-checked against sum over sinks w of
    (number of paths ending at w) squared.
    """
    if not graph.is_acyclic:
        raise InfiniteDimensional("L_K(E) is infinite-dimensional when E has a cycle")
    basis = normal_monomials(graph)
    counts: dict[str, int] = {}
    for p in enumerate_paths(graph, len(graph.vertices)):
        counts[p.target] = counts.get(p.target, 0) + 1
    formula = sum(counts.get(w, 0) ** 2 for w in graph.sinks)
    return BasisReport(tuple(basis), len(basis), formula)


def coordinates(a: LpaElement, index: dict[Monomial, int]) -> list:
    """Coordinate vector of ``a`` against an indexed monomial basis."""
    K = a.field
    v = [K.zero] * len(index)
    for m, c in a.raw_terms().items():
        v[index[m]] = c
    return v


def from_coordinates(graph, field, basis, vec) -> LpaElement:
    return LpaElement(graph, field, {m: c for m, c in zip(basis, vec) if c})


# ---------------------------------------------------------------------------
# the loop graph and Laurent polynomials
# ---------------------------------------------------------------------------

def _loop_parts(graph: Graph):
    if len(graph.vertices) != 1 or len(graph.edges) != 1 or graph.edges[0].src != graph.edges[0].rng:
        raise NotLoopGraph("expected one vertex with one loop")
    return graph.vertices[0], graph.edges[0].id


def laurent_realize(a: LpaElement) -> TestAlgebraElement:
    """The isomorphism L_K(loop) -> K[x, 1/x]: v -> 1, e -> x, e* -> 1/x."""
    _loop_parts(a.graph)
    R = TestAlgebra.laurent(a.field)
    K = a.field
    out: dict = {}
    for m, c in a.raw_terms().items():
        out[m.degree] = K.add(out.get(m.degree, K.zero), c)
    return R.element(out)


def from_laurent(graph: Graph, p: TestAlgebraElement) -> LpaElement:
    """Inverse of ``laurent_realize``."""
    v, e = _loop_parts(graph)
    K = p.field
    out = {}
    for k, c in p.items():
        if k >= 0:
            m = Monomial(Path(v, (e,) * k, v) if k else Path(v), Path(v))
        else:
            m = Monomial(Path(v), Path(v, (e,) * (-k), v))
        out[m] = c
    return LpaElement(graph, K, out)


# ---------------------------------------------------------------------------
# an independent reducer: words in the generators, rewritten in random order
# ---------------------------------------------------------------------------

def _word(m: Monomial) -> tuple:
    if not m.mu.edges and not m.nu.edges:
        return (("v", m.mu.source),)
    return tuple(("e", x) for x in m.mu.edges) + tuple(("g", x) for x in reversed(m.nu.edges))


def _rewrite_pair(graph: Graph, a, b):
    """Rewrite of the adjacent letters ``a b``.

    Returns None when no rule applies, otherwise a list of (letters, sign)
    replacing the pair (an empty list means the pair is 0).
    """
    ka, xa = a
    kb, xb = b
    if ka == "v":
        if kb == "v":
            return [((a,), 1)] if xa == xb else []
        if kb == "e":
            return [((b,), 1)] if graph.s(xb) == xa else []
        return [((b,), 1)] if graph.r(xb) == xa else []
    if kb == "v":
        if ka == "e":
            return [((a,), 1)] if graph.r(xa) == xb else []
        return [((a,), 1)] if graph.s(xa) == xb else []
    if ka == "e" and kb == "e":
        return None if graph.r(xa) == graph.s(xb) else []
    if ka == "g" and kb == "g":
        return None if graph.r(xb) == graph.s(xa) else []
    if ka == "g" and kb == "e":
        return [((("v", graph.r(xa)),), 1)] if xa == xb else []
    # e f*
    if graph.r(xa) != graph.r(xb):
        return []
    v = graph.s(xa)
    if xa == xb and graph.special.get(v) == xa:
        out = [((("v", v),), 1)]
        out += [((("e", f), ("g", f)), -1) for f in graph.emitted[v] if f != xa]
        return out
    return None


def _word_monomial(graph: Graph, word: tuple) -> Monomial:
    if len(word) == 1 and word[0][0] == "v":
        return vertex_monomial(word[0][1])
    es = [x for k, x in word if k == "e"]
    gs = [x for k, x in word if k == "g"][::-1]
    mu = graph.path(es) if es else None
    nu = graph.path(gs) if gs else None
    if mu is None:
        mu = Path(nu.target)
    if nu is None:
        nu = Path(mu.target)
    return Monomial(mu, nu)


def reduce_words(graph: Graph, field: FieldSpec, words: dict, rng: random.Random | None = None) -> LpaElement:
    """Reduce a combination of generator words to normal form.

    Rewrites are applied one at a time at a randomly chosen reducible position
    of a randomly chosen word, so repeated calls explore different reduction
    orders.
    """
    rng = rng or random.Random(0)
    K = field
    pending = {w: K.norm(c) for w, c in words.items() if K.norm(c)}
    done: dict = {}
    while pending:
        w = rng.choice(list(pending))
        c = pending.pop(w)
        spots = []
        for i in range(len(w) - 1):
            rule = _rewrite_pair(graph, w[i], w[i + 1])
            if rule is not None:
                spots.append((i, rule))
        if not spots:
            m = _word_monomial(graph, w)
            done[m] = K.add(done.get(m, K.zero), c)
            continue
        i, rule = rng.choice(spots)
        for letters, s in rule:
            nw = w[:i] + letters + w[i + 2:]
            pending[nw] = K.add(pending.get(nw, K.zero), K.mul(c, K.norm(s)))
            if not pending[nw]:
                del pending[nw]
    return LpaElement(graph, field, done)


def multiply_by_words(a: LpaElement, b: LpaElement, rng: random.Random | None = None) -> LpaElement:
    """Product computed by concatenating generator words and rewriting."""
    a._same(b)
    K = a.field
    words: dict = {}
    for m1, c1 in a.raw_terms().items():
        for m2, c2 in b.raw_terms().items():
            w = _word(m1) + _word(m2)
            words[w] = K.add(words.get(w, K.zero), K.mul(c1, c2))
    return reduce_words(a.graph, K, words, rng)


def dumps_element(a: LpaElement) -> str:
    return json.dumps(a.to_json())
