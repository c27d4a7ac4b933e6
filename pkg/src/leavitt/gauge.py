"""Gauge actions on Leavitt path algebras.

Two versions live here:

* the classical one, K^x acting by scaling a degree-n monomial by z^n;
* the schematic one, a representation of Diag(Z) (or Diag(Z_n)) that acts on
  A (x) R for every test algebra R and unit z of R.

A representation of a diagonalizable group is stored as its value at the
universal element (x in K[x, 1/x], or x in K[x]/(x^n - 1)); the value at any
other point z is the pushforward along the algebra map x -> z.  The comodule
helpers at the bottom turn such a structure matrix into its system of
orthogonal idempotents and back.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import linalg
from .errors import NotARepresentation, NotAUnit, ParseError, ZeroScalar
from .graph import Graph
from .lpa import LpaElement, Monomial, grade
from .scalars import FieldSpec, Scalar, TestAlgebra, TestAlgebraElement, field_units


@dataclass(frozen=True)
class GradingGroup:
    """Z (``n is None``) or Z_n."""

    n: int | None = None

    def __post_init__(self):
        if self.n is not None and self.n < 1:
            raise ValueError("Z_n needs n >= 1")

    @classmethod
    def integers(cls) -> "GradingGroup":
        return cls(None)

    @classmethod
    def cyclic(cls, n: int) -> "GradingGroup":
        return cls(n)

    @property
    def name(self) -> str:
        return "Z" if self.n is None else f"Z{self.n}"

    @classmethod
    def parse(cls, text: str) -> "GradingGroup":
        t = text.strip().upper()
        if t == "Z":
            return cls(None)
        if t.startswith("Z") and t[1:].lstrip("_").isdigit():
            return cls(int(t[1:].lstrip("_")))
        raise ParseError(f"unknown grading group {text!r}")

    def reduce(self, d: int) -> int:
        return d if self.n is None else d % self.n

    def representing_algebra(self, field: FieldSpec) -> TestAlgebra:
        """The group algebra K Lambda: Laurent polynomials, or K[x]/(x^n - 1)."""
        if self.n is None:
            return TestAlgebra.laurent(field)
        return TestAlgebra.cyclic(field, self.n)

    def check_point(self, z: TestAlgebraElement):
        """Raise unless z is a point of Diag(Lambda)(R), i.e. a unit (with z^n = 1 for Z_n)."""
        if not z.is_unit():
            raise NotAUnit(f"{z} is not a unit of {z.algebra.name}")
        if self.n is not None and z**self.n != z.algebra.one:
            raise NotAUnit(f"{z} is a unit but not an {self.n}-th root of unity")


# ---------------------------------------------------------------------------
# elements of A (x) R
# ---------------------------------------------------------------------------

class Extended:
    """An element of L_K(E) (x) R: normal monomial -> nonzero element of R."""

    __slots__ = ("graph", "field", "algebra", "_terms")

    def __init__(self, graph: Graph, algebra: TestAlgebra, terms: dict | None = None):
        self.graph = graph
        self.algebra = algebra
        self.field = algebra.field
        self._terms = {m: r for m, r in (terms or {}).items() if r}

    @classmethod
    def lift(cls, a: LpaElement, R: TestAlgebra, r: TestAlgebraElement | None = None) -> "Extended":
        """a (x) r, with r = 1 by default."""
        r = R.one if r is None else r
        return cls(a.graph, R, {m: r.scale(c) for m, c in a.raw_terms().items()})

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key)

    def __add__(self, other):
        out = dict(self._terms)
        for m, r in other._terms.items():
            out[m] = out[m] + r if m in out else r
        return Extended(self.graph, self.algebra, out)

    def __mul__(self, other: "Extended") -> "Extended":
        """Product in the R-algebra A (x) R."""
        from .lpa import multiply_monomials

        K = self.field
        out: dict = {}
        for m1, r1 in self._terms.items():
            for m2, r2 in other._terms.items():
                r = r1 * r2
                for m, s in multiply_monomials(self.graph, m1, m2):
                    rs = r if s == 1 else r.scale(K.norm(s))
                    out[m] = out[m] + rs if m in out else rs
        return Extended(self.graph, self.algebra, out)

    def __eq__(self, other):
        if not isinstance(other, Extended):
            return NotImplemented
        return self.graph == other.graph and self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self):
        return hash((self.graph, self.algebra, frozenset(self._terms.items())))

    def coefficient_of_power(self, n: int) -> LpaElement:
        """The A-coordinate of x^n (R must have the basis {x^k})."""
        return LpaElement(self.graph, self.field, {m: r.coefficient(n) for m, r in self._terms.items()})

    def powers(self) -> list[int]:
        return sorted({e for r in self._terms.values() for e in r.support})

    def pushforward(self, z: TestAlgebraElement) -> "Extended":
        """Apply 1 (x) alpha where alpha sends x to z (R is a group algebra)."""
        return Extended(self.graph, z.algebra, {m: r.substitute(z) for m, r in self._terms.items()})

    def specialize(self) -> LpaElement:
        """A (x) K = A."""
        if self.algebra.kind != "base":
            raise ValueError("only A (x) K identifies with A")
        return LpaElement(self.graph, self.field, {m: r.coefficient(0) for m, r in self._terms.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{m} (x) [{r}]" for m, r in self.items())

    __repr__ = __str__


# ---------------------------------------------------------------------------
# actions
# ---------------------------------------------------------------------------

def classical_apply(a: LpaElement, z) -> LpaElement:
    """tau(z): scale every degree-n monomial by z^n, z a nonzero scalar."""
    K = a.field
    if isinstance(z, Scalar):
        z = z.value
    z = K.norm(z)
    if not z:
        raise ZeroScalar("the classical gauge action needs z != 0")
    return LpaElement(a.graph, K, {m: K.mul(c, K.power(z, m.degree)) for m, c in a.raw_terms().items()})


@dataclass(frozen=True)
class GaugeAction:
    """The schematic gauge action of L_K(E), optionally coarsened to Z_n.

    Backed by the canonical grading: a monomial of degree d is homogeneous of
    degree d (mod n).
    """

    graph: Graph
    field: FieldSpec
    group: GradingGroup = GradingGroup()

    def degree(self, m: Monomial) -> int:
        return self.group.reduce(m.degree)

    def apply(self, z: TestAlgebraElement, t: Extended) -> Extended:
        """rho_R(z) on A (x) R: a_d (x) r -> a_d (x) z^d r."""
        if z.algebra != t.algebra:
            raise ValueError("z and the tensor live over different test algebras")
        if t.graph != self.graph:
            raise ValueError("tensor is over a different graph")
        self.group.check_point(z)
        powers: dict[int, TestAlgebraElement] = {}
        out = {}
        for m, r in t._terms.items():
            d = self.degree(m)
            if d not in powers:
                powers[d] = z**d
            out[m] = powers[d] * r
        return Extended(self.graph, t.algebra, out)

    def universal(self) -> TestAlgebraElement:
        return self.group.representing_algebra(self.field).x


def schematic_apply(action: GaugeAction, z: TestAlgebraElement, t: Extended) -> Extended:
    return action.apply(z, t)


def recover_component(action: GaugeAction, a: LpaElement, n: int) -> LpaElement:
    """Homogeneous component of degree n, read off the universal element.

    rho(x)(a (x) 1) = sum_n a_n (x) x^n, so a_n is the coefficient of x^n.
    """
    x = action.universal()
    t = action.apply(x, Extended.lift(a, x.algebra))
    return t.coefficient_of_power(action.group.reduce(n))


def classical_eigenspace(a: LpaElement, n: int, bound: int | None = None) -> LpaElement:
    """Component of ``a`` in {b : tau(z) b = z^n b for all units z}.

    tau(z) is diagonal on monomials, so that subspace is spanned by the
    components of degree d with z^d = z^n for every unit z.  Over Q the units
    are sampled as +-1, ..., +-bound.
    """
    K = a.field
    units = field_units(K, bound)
    keep = {}
    for d, comp in grade(a).items():
        if all(K.power(z, d) == K.power(z, n) for z in units):
            keep[d] = comp
    out = LpaElement(a.graph, K)
    for comp in keep.values():
        out = out + comp
    return out


# ---------------------------------------------------------------------------
# comodules and idempotents
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComoduleMap:
    """Structure map m_j -> sum_i m_i (x) matrix[i][j] of a representation.

    The entries live in the group algebra of the grading group.
    """

    group: GradingGroup
    field: FieldSpec
    matrix: tuple

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in self.matrix))
        n = len(self.matrix)
        R = self.group.representing_algebra(self.field)
        for row in self.matrix:
            if len(row) != n:
                raise ValueError("structure matrix must be square")
            for x in row:
                if x.algebra != R:
                    raise ValueError(f"entries must lie in {R.name}")

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    @property
    def algebra(self) -> TestAlgebra:
        return self.group.representing_algebra(self.field)

    def support(self) -> list[int]:
        return sorted({e for row in self.matrix for x in row for e in x.support})

    def coefficient_matrix(self, lam: int):
        return [[x.coefficient(lam) for x in row] for row in self.matrix]

    def evaluate(self, z: TestAlgebraElement):
        """Matrix of rho_R(z): push the universal value forward along x -> z."""
        self.group.check_point(z)
        return [[x.substitute(z) for x in row] for row in self.matrix]

    def to_json(self) -> dict:
        return {"group": self.group.name, "field": self.field.name,
                "matrix": [[x.to_json() for x in row] for row in self.matrix]}

    @classmethod
    def from_json(cls, data) -> "ComoduleMap":
        from .scalars import FieldSpec as _F

        if not isinstance(data, dict) or set(data) != {"group", "field", "matrix"}:
            raise ParseError("comodule needs exactly 'group', 'field', 'matrix'")
        group = GradingGroup.parse(data["group"])
        field = _F.parse(data["field"])
        R = group.representing_algebra(field)
        try:
            rows = [[R.element({int(k): v for k, v in entry.items()}) for entry in row] for row in data["matrix"]]
        except (AttributeError, TypeError, ValueError) as exc:
            raise ParseError(f"bad matrix: {exc}") from None
        return cls(group, field, rows)


@dataclass(frozen=True)
class IdempotentSystem:
    field: FieldSpec
    projections: dict  # degree -> square matrix of raw values

    def degrees(self) -> list[int]:
        return sorted(self.projections)

    def rank(self, lam: int) -> int:
        return linalg.rank(self.projections[lam], self.field)

    def to_json(self) -> dict:
        K = self.field
        return {str(lam): [[K.format(v) for v in row] for row in p]
                for lam, p in sorted(self.projections.items())}


def comodule_to_idempotents(c: ComoduleMap) -> IdempotentSystem:
    """Extract p_lambda = coefficient of lambda and verify it is a representation.

    Checked identities:
      counit        sum_lambda p_lambda = id
      coassociative p_mu p_lambda = delta_{mu,lambda} p_lambda
    (the second one is the comparison of rho(alpha beta) with
    rho(alpha) rho(beta) at R = K Lambda (x) K Lambda, coefficient by
    coefficient on the basis mu (x) lambda).
    """
    K = c.field
    n = c.dimension
    lams = c.support()
    proj = {lam: c.coefficient_matrix(lam) for lam in lams}
    failures = []

    total = linalg.zeros(n, n, K)
    for p in proj.values():
        total = linalg.matadd(total, p, K)
    if total != linalg.identity(n, K):
        failures.append("counit: sum of p_lambda is not the identity")

    for mu in lams:
        for lam in lams:
            prod = linalg.matmul(proj[mu], proj[lam], K)
            if mu == lam and prod != proj[lam]:
                failures.append(f"idempotency: p_{lam}^2 != p_{lam}")
            elif mu != lam and not linalg.is_zero_matrix(prod):
                failures.append(f"orthogonality: p_{mu} p_{lam} != 0")
    if failures:
        raise NotARepresentation(failures)
    return IdempotentSystem(K, proj)


def grading_to_comodule(degrees, group: GradingGroup, field: FieldSpec) -> ComoduleMap:
    """Diagonal structure matrix diag(x^d_1, ..., x^d_k) of a graded basis."""
    R = group.representing_algebra(field)
    k = len(degrees)
    rows = [[R.monomial(group.reduce(d)) if i == j else R.zero for j in range(k)]
            for i, d in enumerate(degrees)]
    return ComoduleMap(group, field, rows)


def idempotents_to_degrees(system: IdempotentSystem) -> list[int]:
    """For a diagonal system, the degree carried by each coordinate."""
    K = system.field
    out = {}
    for lam, p in system.projections.items():
        for i, row in enumerate(p):
            if row[i] == K.one:
                out[i] = lam
    return [out[i] for i in sorted(out)]


def dumps_comodule(c: ComoduleMap) -> str:
    return json.dumps(c.to_json())
