"""Exact dense linear algebra over Q(i) and small polynomial matrices.

Matrices are plain lists of rows.  Entries are GaussianRational for the
numeric routines and MultiPoly (or anything ring-like) for the symbolic
determinants.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

from .gaussian import ONE, ZERO, GaussianRational
from .poly import MultiPoly, divide_exact

Matrix = list[list[GaussianRational]]


def to_matrix(rows) -> Matrix:
    return [[GaussianRational.coerce(v) for v in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def transpose(M):
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), ZERO) for col in Bt] for row in A]


def matvec(A, v):
    return [sum((a * b for a, b in zip(row, v)), ZERO) for row in A]


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), ZERO)


def bilinear(M, u, v):
    """u^T M v (no conjugation)."""
    return dot(u, matvec(M, v))


def is_symmetric(M) -> bool:
    n = len(M)
    return all(len(r) == n for r in M) and all(
        M[i][j] == M[j][i] for i in range(n) for j in range(i + 1, n)
    )


def trace(M):
    return sum((M[i][i] for i in range(len(M))), ZERO)


def rref(M) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    R = [list(map(GaussianRational.coerce, row)) for row in M]
    rows = len(R)
    cols = len(R[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if R[i][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = R[r][c].inverse()
        R[r] = [x * inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M) -> int:
    if not M:
        return 0
    return len(rref(M)[1])


def nullspace(M, ncols: int | None = None) -> list[list[GaussianRational]]:
    """Basis of {v : M v = 0}, one vector per free column."""
    if not M:
        n = ncols or 0
        return [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]
    R, pivots = rref(M)
    n = len(R[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def row_space(vectors) -> Matrix:
    """Canonical basis (nonzero rows of the rref) of the span of ``vectors``."""
    if not vectors:
        return []
    R, pivots = rref(vectors)
    return R[: len(pivots)]


def solve(M, b) -> list[GaussianRational] | None:
    """One solution of M x = b, or None if inconsistent."""
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(aug)
    n = len(M[0])
    if n in pivots:
        return None
    x = [ZERO] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return x


def det(M) -> GaussianRational:
    """Determinant by Gaussian elimination."""
    A = [list(map(GaussianRational.coerce, row)) for row in M]
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    result = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            A[c], A[p] = A[p], A[c]
            result = -result
        piv = A[c][c]
        result = result * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return result


def _check_square(M):
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("determinant of a non-square matrix")
    return n


def det_symbolic(M: Sequence[Sequence[MultiPoly]], crosscheck: bool = False) -> MultiPoly:
    """Cofactor expansion along the first row.

    With ``crosscheck`` the result is compared against fraction-free
    elimination and an ``AssertionError`` is raised on disagreement.
    """
    n = _check_square(M)
    rows = [[MultiPoly._lift(e) for e in r] for r in M]
    result = _laplace(rows, tuple(range(n)), tuple(range(n)))
    if crosscheck:
        other = det_bareiss(rows)
        if other != result:
            raise AssertionError("Laplace and Bareiss determinants disagree")
    return result


def _laplace(M, rows, cols, cache=None):
    if cache is None:
        cache = {}
    key = (rows, cols)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if len(rows) == 1:
        return M[rows[0]][cols[0]]
    r0, rest = rows[0], rows[1:]
    total = MultiPoly.zero()
    for k, c in enumerate(cols):
        e = M[r0][c]
        if not e:
            continue
        sub = _laplace(M, rest, cols[:k] + cols[k + 1 :], cache)
        term = e * sub
        total = total - term if k % 2 else total + term
    cache[key] = total
    return total


def det_bareiss(M) -> MultiPoly:
    """Fraction-free (Bareiss) elimination with exact polynomial division."""
    n = _check_square(M)
    A = [[MultiPoly._lift(e) for e in r] for r in M]
    sign = 1
    prev = MultiPoly.const(1)
    for k in range(n - 1):
        if not A[k][k]:
            p = next((i for i in range(k + 1, n) if A[i][k]), None)
            if p is None:
                return MultiPoly.zero()
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = divide_exact(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev)
        prev = A[k][k]
    d = A[n - 1][n - 1]
    return d if sign > 0 else -d


def det_leibniz(M):
    """Permutation-sum determinant; only for tiny matrices and tests."""
    n = _check_square(M)
    total = MultiPoly.zero()
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = MultiPoly.const(-1 if inv % 2 else 1)
        for i, j in enumerate(perm):
            term = term * MultiPoly._lift(M[i][j])
        total = total + term
    return total


def minors(M, k: int):
    """All k x k minors as ((rows, cols), determinant) pairs."""
    n = len(M)
    m = len(M[0])
    out = []
    for rows in combinations(range(n), k):
        for cols in combinations(range(m), k):
            sub = [[M[r][c] for c in cols] for r in rows]
            out.append(((rows, cols), det_symbolic(sub)))
    return out


def eval_matrix(M, point) -> Matrix:
    return [[MultiPoly._lift(e).eval(point) for e in row] for row in M]


def charpoly(M) -> list[GaussianRational]:
    """Coefficients c_0..c_n of det(t I - M) (Faddeev-LeVerrier)."""
    n = len(M)
    A = to_matrix(M)
    if all(not e.im for row in A for e in row):
        # real input: plain Fractions are much cheaper than Q(i) arithmetic
        A = [[e.re for e in row] for row in A]
        zero, one = Fraction(0), Fraction(1)
    else:
        zero, one = ZERO, ONE
    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    AM = [[zero] * n for _ in range(n)]  # A M_0 with M_0 = 0
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        c = coeffs[n - k + 1]
        Mk = [[AM[i][j] + c if i == j else AM[i][j] for j in range(n)] for i in range(n)]
        AM = [[sum((a * b for a, b in zip(row, col)), zero) for col in zip(*Mk)] for row in A]
        coeffs[n - k] = -sum((AM[i][i] for i in range(n)), zero) / k
    return [GaussianRational.coerce(c) for c in coeffs]
