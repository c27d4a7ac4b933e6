"""Exact scalars (prime fields and the rationals) and the commutative test
algebras at which group-scheme functors get evaluated.

Internally every module passes *raw* field values around (an ``int`` in
``[0, p)`` for a prime field, a ``Fraction`` for the rationals) and uses the
``FieldSpec`` methods to combine them.  ``Scalar`` is the public, self-aware
wrapper around one raw value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    AlgebraMismatch,
    DivisionByZero,
    FieldMismatch,
    InfiniteUnitGroup,
    NotAUnit,
    ParseError,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field F_p (``p`` set) or the rationals (``p is None``)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``"F2"``, ``"F3"``, ``"GF(5)"`` or ``"Q"``."""
        t = text.strip().upper()
        if t in ("Q", "QQ"):
            return cls(None)
        for prefix in ("GF(", "F_", "GF", "F"):
            if t.startswith(prefix):
                digits = t[len(prefix):].rstrip(")")
                if digits.isdigit():
                    try:
                        return cls(int(digits))
                    except ValueError as exc:
                        raise ParseError(str(exc)) from None
        raise ParseError(f"unknown field {text!r}")

    @property
    def name(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"

    def __str__(self):
        return self.name

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    # raw arithmetic -------------------------------------------------------

    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def norm(self, v):
        """Canonical raw representative of an int or Fraction."""
        if self.p is None:
            return Fraction(v)
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise DivisionByZero(f"{v} has no image in {self.name}")
            return v.numerator * pow(v.denominator, -1, self.p) % self.p
        return int(v) % self.p

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def neg(self, a):
        return (-a) % self.p if self.p is not None else -a

    def mul(self, a, b):
        return (a * b) % self.p if self.p is not None else a * b

    def inv(self, a):
        if not a:
            raise DivisionByZero("division by zero")
        return pow(a, -1, self.p) if self.p is not None else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, n: int):
        if n < 0:
            return self.power(self.inv(a), -n)
        return pow(a, n, self.p) if self.p is not None else a**n

    def format(self, a) -> str:
        return str(a)

    def parse_value(self, text) -> object:
        try:
            return self.norm(Fraction(str(text).strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar {text!r}: {exc}") from None

    def elements(self) -> Iterator:
        if self.p is None:
            raise InfiniteUnitGroup("the rationals are infinite")
        return iter(range(self.p))

    def __call__(self, value) -> "Scalar":
        if isinstance(value, str):
            return Scalar(self.parse_value(value), self)
        return Scalar(self.norm(value), self)


class Scalar:
    """An element of a ``FieldSpec`` in canonical form."""

    __slots__ = ("value", "field")

    def __init__(self, value, field: FieldSpec):
        self.value = field.norm(value)
        self.field = field

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.norm(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Scalar(self.field.add(self.value, b), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Scalar(self.field.sub(self.value, b), self.field)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Scalar(self.field.sub(b, self.value), self.field)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Scalar(self.field.mul(self.value, b), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Scalar(self.field.div(self.value, b), self.field)

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def __pow__(self, n: int):
        return Scalar(self.field.power(self.value, n), self.field)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.norm(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field))

    def __bool__(self):
        return bool(self.value)

    def is_unit(self) -> bool:
        return bool(self.value)

    def inverse(self) -> "Scalar":
        return Scalar(self.field.inv(self.value), self.field)

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self.value}, {self.field.name})"


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# test algebras
# ---------------------------------------------------------------------------

BASE, CYCLIC, LAURENT = "base", "cyclic", "laurent"


@dataclass(frozen=True)
class TestAlgebra:
    """A commutative unital K-algebra R: K itself, K[x]/(x^n - 1), or K[x, 1/x]."""

    __test__ = False  # keep pytest from collecting this class

    field: FieldSpec
    kind: str = LAURENT
    n: int | None = None

    def __post_init__(self):
        if self.kind not in (BASE, CYCLIC, LAURENT):
            raise ValueError(f"unknown test algebra kind {self.kind!r}")
        if self.kind == CYCLIC and (self.n is None or self.n < 1):
            raise ValueError("cyclic group algebra needs n >= 1")
        if self.kind != CYCLIC and self.n is not None:
            raise ValueError("only the cyclic kind takes n")

    @classmethod
    def base(cls, field: FieldSpec) -> "TestAlgebra":
        return cls(field, BASE)

    @classmethod
    def cyclic(cls, field: FieldSpec, n: int) -> "TestAlgebra":
        return cls(field, CYCLIC, n)

    @classmethod
    def laurent(cls, field: FieldSpec) -> "TestAlgebra":
        return cls(field, LAURENT)

    @property
    def name(self) -> str:
        K = self.field.name
        if self.kind == BASE:
            return K
        if self.kind == CYCLIC:
            return f"{K}[x]/(x^{self.n}-1)"
        return f"{K}[x,x^-1]"

    @property
    def dimension(self) -> int | None:
        return {BASE: 1, CYCLIC: self.n, LAURENT: None}[self.kind]

    def reduce_exponent(self, e: int) -> int:
        if self.kind == CYCLIC:
            return e % self.n
        if self.kind == BASE and e != 0:
            raise ValueError("the base algebra has no variable")
        return e

    def element(self, coeffs: dict | Iterable | None = None) -> "TestAlgebraElement":
        """Build an element from ``{exponent: value}``; values may be strings."""
        if coeffs is None:
            coeffs = {}
        if not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        K = self.field
        raw = {}
        for e, c in coeffs.items():
            c = K.parse_value(c) if isinstance(c, str) else K.norm(c.value if isinstance(c, Scalar) else c)
            e = self.reduce_exponent(int(e))
            raw[e] = K.add(raw.get(e, K.zero), c)
        return TestAlgebraElement(self, raw)

    @property
    def zero(self) -> "TestAlgebraElement":
        return TestAlgebraElement(self, {})

    @property
    def one(self) -> "TestAlgebraElement":
        return TestAlgebraElement(self, {0: self.field.one})

    @property
    def x(self) -> "TestAlgebraElement":
        """The generator x (the universal unit when R is the Laurent algebra)."""
        if self.kind == BASE:
            raise ValueError("the base algebra has no variable")
        return TestAlgebraElement(self, {self.reduce_exponent(1): self.field.one})

    def monomial(self, e: int, c=1) -> "TestAlgebraElement":
        return TestAlgebraElement(self, {self.reduce_exponent(e): self.field.norm(c)})


class TestAlgebraElement:
    """Sparse element of a ``TestAlgebra``: exponent -> nonzero raw coefficient."""

    __test__ = False
    __slots__ = ("algebra", "_coeffs", "_hash")

    def __init__(self, algebra: TestAlgebra, coeffs: dict):
        self.algebra = algebra
        self._coeffs = {e: c for e, c in coeffs.items() if c}
        self._hash = None

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    def items(self):
        return sorted(self._coeffs.items())

    def coefficient(self, e: int):
        """Raw coefficient of x^e."""
        return self._coeffs.get(self.algebra.reduce_exponent(e), self.field.zero)

    @property
    def support(self) -> list[int]:
        return sorted(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def _check(self, other):
        if not isinstance(other, TestAlgebraElement):
            return False
        if other.algebra != self.algebra:
            raise AlgebraMismatch(f"{self.algebra.name} vs {other.algebra.name}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        K = self.field
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = K.add(out.get(e, K.zero), c)
        return TestAlgebraElement(self.algebra, out)

    def __neg__(self):
        K = self.field
        return TestAlgebraElement(self.algebra, {e: K.neg(c) for e, c in self._coeffs.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "TestAlgebraElement":
        K = self.field
        c = K.norm(c.value if isinstance(c, Scalar) else c)
        return TestAlgebraElement(self.algebra, {e: K.mul(c, v) for e, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        K = self.field
        red = self.algebra.reduce_exponent
        out: dict = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = red(e1 + e2)
                out[e] = K.add(out.get(e, K.zero), K.mul(c1, c2))
        return TestAlgebraElement(self.algebra, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        result = self.algebra.one
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, TestAlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.algebra, frozenset(self._coeffs.items())))
        return self._hash

    # units ------------------------------------------------------------------

    def _multiplication_matrix(self):
        n = self.algebra.n
        K = self.field
        cols = []
        for j in range(n):
            col = [K.zero] * n
            for e, c in self._coeffs.items():
                col[(e + j) % n] = K.add(col[(e + j) % n], c)
            cols.append(col)
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def _inverse_or_none(self):
        kind = self.algebra.kind
        K = self.field
        if kind in (BASE, LAURENT):
            if len(self._coeffs) != 1:
                return None
            ((e, c),) = self._coeffs.items()
            return TestAlgebraElement(self.algebra, {self.algebra.reduce_exponent(-e): K.inv(c)})
        from .linalg import solve

        n = self.algebra.n
        rhs = [K.one] + [K.zero] * (n - 1)
        sol = solve(self._multiplication_matrix(), rhs, K, unique=True)
        if sol is None:
            return None
        return TestAlgebraElement(self.algebra, dict(enumerate(sol)))

    def is_unit(self) -> bool:
        return self._inverse_or_none() is not None

    def inverse(self) -> "TestAlgebraElement":
        inv = self._inverse_or_none()
        if inv is None:
            raise NotAUnit(f"{self} is not invertible in {self.algebra.name}")
        return inv

    def substitute(self, z: "TestAlgebraElement") -> "TestAlgebraElement":
        """Image under the algebra map from this element's algebra sending x to ``z``.

        Only defined from the Laurent algebra (any unit z) or from
        K[x]/(x^n-1) (z with z^n = 1).
        """
        kind = self.algebra.kind
        if kind == BASE:
            return z.algebra.one.scale(self.coefficient(0))
        if not z.is_unit():
            raise NotAUnit(f"{z} is not a unit")
        if kind == CYCLIC and z**self.algebra.n != z.algebra.one:
            raise NotAUnit(f"{z} is not an {self.algebra.n}-th root of unity")
        out = z.algebra.zero
        for e, c in self._coeffs.items():
            out = out + (z**e).scale(c)
        return out

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            cs = self.field.format(c)
            if e == 0:
                parts.append(cs)
            else:
                xe = "x" if e == 1 else f"x^{e}"
                parts.append(xe if cs == "1" else f"{cs}*{xe}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self} in {self.algebra.name}>"

    def to_json(self) -> dict:
        return {str(e): self.field.format(c) for e, c in self.items()}


def is_unit(a: TestAlgebraElement) -> bool:
    return a.is_unit()


def inverse(a: TestAlgebraElement) -> TestAlgebraElement:
    return a.inverse()


def enumerate_units(R: TestAlgebra, bound: int = 10_000) -> list[TestAlgebraElement]:
    """All units of a finite test algebra, at most ``bound`` of them."""
    K = R.field
    if not K.is_finite or R.kind == LAURENT:
        raise InfiniteUnitGroup(f"{R.name} has infinitely many units")
    units = []
    dim = R.dimension
    for coeffs in itertools.product(range(K.p), repeat=dim):
        a = TestAlgebraElement(R, dict(enumerate(coeffs)))
        if a.is_unit():
            units.append(a)
            if len(units) >= bound:
                break
    return units


def field_units(field: FieldSpec, bound: int | None = None) -> list:
    """Raw units of K: all of them for F_p, or the sample +-1..+-bound for Q."""
    if field.is_finite:
        return list(range(1, field.p))
    if bound is None:
        raise InfiniteUnitGroup("the rationals have infinitely many units; pass a sampling bound")
    out = []
    for k in range(1, bound + 1):
        out += [Fraction(k), Fraction(-k)]
    return out
