from fractions import Fraction
from itertools import permutations, product

from hypothesis import given
from hypothesis import strategies as st

from leavitt import linalg
from leavitt.scalars import FieldSpec

Q = FieldSpec.rationals()
small_primes = st.sampled_from([2, 3])


def _span_size(rows, p):
    # brute force: every combination of the rows
    n = len(rows[0])
    seen = set()
    for coeffs in product(range(p), repeat=len(rows)):
        seen.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % p for j in range(n)))
    return len(seen)


def _det(A):
    n = len(A)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i in range(n):
            term *= A[i][perm[i]]
        total += term
    return total


@st.composite
def fp_matrices(draw):
    p = draw(small_primes)
    r, c = draw(st.integers(1, 4)), draw(st.integers(1, 4))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r))
    return p, rows


@given(fp_matrices())
def test_rank_matches_span_size(data):
    p, rows = data
    assert p ** linalg.rank(rows, FieldSpec.prime(p)) == _span_size(rows, p)


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_rational_invertibility_matches_determinant(A):
    A = [[Fraction(v) for v in row] for row in A]
    inv = linalg.inverse(A, Q)
    assert (inv is not None) == (_det(A) != 0)
    if inv is not None:
        assert linalg.matmul(A, inv, Q) == linalg.identity(len(A), Q)


@given(fp_matrices(), st.data())
def test_solve_returns_a_solution(data, extra):
    p, A = data
    K = FieldSpec.prime(p)
    x = extra.draw(st.lists(st.integers(0, p - 1), min_size=len(A[0]), max_size=len(A[0])))
    b = [sum(a * xi for a, xi in zip(row, x)) % p for row in A]
    y = linalg.solve(A, b, K)
    assert y is not None
    assert [sum(a * yi for a, yi in zip(row, y)) % p for row in A] == b


def test_solve_inconsistent_and_nonunique():
    K = FieldSpec.prime(5)
    assert linalg.solve([[1, 1], [1, 1]], [1, 2], K) is None
    assert linalg.solve([[1, 1]], [1], K, unique=True) is None
    assert linalg.solve([[1, 0], [0, 2]], [1, 1], K, unique=True) == [1, 3]


@given(fp_matrices())
def test_echelon_span_is_canonical(data):
    p, rows = data
    K = FieldSpec.prime(p)
    a, b = linalg.EchelonSpan(len(rows[0]), K), linalg.EchelonSpan(len(rows[0]), K)
    for r in rows:
        a.add(r)
    for r in reversed(rows):
        b.add(r)
    assert a.basis() == b.basis()
    assert len(a) == linalg.rank(rows, K)
    assert all(a.contains(r) for r in rows)
