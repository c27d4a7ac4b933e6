"""Dense Gaussian elimination over a ``FieldSpec``.

Matrices are lists of rows of raw field values.  Nothing here is clever; the
algebras involved have dimension in the tens.
"""

from __future__ import annotations

from .scalars import FieldSpec


def rref(rows, K: FieldSpec, ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows.
    Pivots are searched in the first ``ncols`` columns (all by default).
    """
    R = [list(r) for r in rows]
    if not R:
        return [], []
    width = len(R[0])
    ncols = width if ncols is None else ncols
    pivots = []
    top = 0
    for col in range(ncols):
        found = None
        for i in range(top, len(R)):
            if R[i][col]:
                found = i
                break
        if found is None:
            continue
        R[top], R[found] = R[found], R[top]
        inv = K.inv(R[top][col])
        R[top] = [K.mul(inv, v) for v in R[top]]
        for i in range(len(R)):
            if i != top and R[i][col]:
                f = R[i][col]
                R[i] = [K.sub(a, K.mul(f, b)) for a, b in zip(R[i], R[top])]
        pivots.append(col)
        top += 1
        if top == len(R):
            break
    # below the pivots only the columns past ncols can still be nonzero
    return R[:top] + [r for r in R[top:] if any(r)], pivots


def rank(rows, K: FieldSpec) -> int:
    return len(rref(rows, K)[1])


def solve(A, b, K: FieldSpec, unique: bool = False):
    """One solution x of A x = b, or None.  With ``unique`` also None when
    the solution is not unique."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug, K, ncols=n)
    # inconsistent: a row that is zero on A but not on b
    for row in R:
        if all(not v for v in row[:n]) and row[n]:
            return None
    if unique and len(pivots) < n:
        return None
    x = [K.zero] * n
    for row, p in zip(R, pivots):
        x[p] = row[n]
    return x


def solve_many(A, B, K: FieldSpec):
    """Solve A X = B for square invertible A; columns of B are right-hand sides.

    Returns X (as rows), or None when A is singular.
    """
    n = len(A)
    m = len(B[0]) if B else 0
    aug = [list(A[i]) + list(B[i]) for i in range(n)]
    R, pivots = rref(aug, K, ncols=n)
    if len(pivots) < n:
        return None
    return [row[n:n + m] for row in R]


def inverse(A, K: FieldSpec):
    n = len(A)
    I = identity(n, K)
    return solve_many(A, I, K)


def identity(n: int, K: FieldSpec):
    return [[K.one if i == j else K.zero for j in range(n)] for i in range(n)]


def zeros(n: int, m: int, K: FieldSpec):
    return [[K.zero] * m for _ in range(n)]


def matmul(A, B, K: FieldSpec):
    m = len(B[0]) if B else 0
    out = []
    for row in A:
        new = [K.zero] * m
        for a, brow in zip(row, B):
            if a:
                for j, bv in enumerate(brow):
                    if bv:
                        new[j] = K.add(new[j], K.mul(a, bv))
        out.append(new)
    return out


def matadd(A, B, K: FieldSpec):
    return [[K.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def is_zero_matrix(A) -> bool:
    return all(not v for row in A for v in row)


class EchelonSpan:
    """Incrementally maintained span of vectors of fixed length.

    Rows are kept fully reduced, so ``basis()`` is the unique reduced row
    echelon form of the span.
    """

    def __init__(self, length: int, K: FieldSpec):
        self.length = length
        self.K = K
        self._rows: dict[int, list] = {}  # pivot column -> row (pivot entry 1)

    def __len__(self):
        return len(self._rows)

    def reduce(self, vec):
        K = self.K
        v = list(vec)
        for p, row in self._rows.items():
            if v[p]:
                f = v[p]
                v = [K.sub(a, K.mul(f, b)) for a, b in zip(v, row)]
        return v

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec) -> bool:
        """Add a vector; True when the span grew."""
        K = self.K
        v = self.reduce(vec)
        pivot = next((i for i, a in enumerate(v) if a), None)
        if pivot is None:
            return False
        inv = K.inv(v[pivot])
        v = [K.mul(inv, a) for a in v]
        for p, row in self._rows.items():
            if row[pivot]:
                f = row[pivot]
                self._rows[p] = [K.sub(a, K.mul(f, b)) for a, b in zip(row, v)]
        self._rows[pivot] = v
        return True

    def basis(self) -> list[list]:
        return [self._rows[p] for p in sorted(self._rows)]
