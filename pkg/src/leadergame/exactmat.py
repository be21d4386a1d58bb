"""Exact dense linear algebra over arbitrary-precision integers.

Determinants use fraction-free (Bareiss) elimination, so every intermediate
value stays an integer. Rationals are stdlib ``fractions.Fraction`` values,
which are always reduced with a positive denominator. Matrices are plain
lists of lists; everything here is a pure function on immutable-by-convention
inputs, safe to evaluate concurrently.
"""
from __future__ import annotations

from fractions import Fraction

from .graphs import Graph, laplacian

# n x n minor expansion is used for adjugates up to this size; above it the
# columns come from exact solves against det * e_j (nonsingular case).
ADJUGATE_MINOR_LIMIT = 12


def _require_square(m) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    return n


def determinant_int(m) -> int:
    """Exact determinant of an integer matrix by Bareiss elimination.

    Row swaps stand in for zero pivots; a fully zero pivot column means the
    determinant is zero. The 0 x 0 determinant is 1.
    """
    n = _require_square(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        top = a[k]
        for i in range(k + 1, n):
            row = a[i]
            lead = row[k]
            for j in range(k + 1, n):
                row[j] = (pivot * row[j] - lead * top[j]) // prev
            row[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _minor(m, i: int, j: int):
    return [
        [x for c, x in enumerate(row) if c != j]
        for r, row in enumerate(m)
        if r != i
    ]


def adjugate_int(m):
    """Transpose of the cofactor matrix; satisfies m @ adj(m) == det(m) * I.

    Entries come from n^2 minor determinants for n <= ADJUGATE_MINOR_LIMIT;
    larger nonsingular matrices use one exact solve per column instead.
    Works for singular matrices as well (minor path).
    """
    n = _require_square(m)
    if n == 0:
        return []
    if n == 1:
        return [[1]]
    if n > ADJUGATE_MINOR_LIMIT:
        det = determinant_int(m)
        if det != 0:
            cols = []
            for j in range(n):
                e = [0] * n
                e[j] = 1
                x = solve_rational(m, e)
                col = [v * det for v in x]
                if any(v.denominator != 1 for v in col):
                    raise ArithmeticError("adjugate column failed exact division")
                cols.append([int(v) for v in col])
            return [[cols[j][i] for j in range(n)] for i in range(n)]
    adj = [[0] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            sgn = -1 if (r + c) % 2 else 1
            adj[r][c] = sgn * determinant_int(_minor(m, c, r))
    return adj


def solve_rational(m, b) -> list:
    """Exact solution of m @ x == b for an integer matrix and integer vector.

    Fraction-free forward elimination keeps the triangular system integral;
    back substitution produces reduced Fractions. Raises on singular input.
    """
    n = _require_square(m)
    if len(b) != n:
        raise ValueError("right-hand side length does not match matrix size")
    for v in b:
        if not isinstance(v, int):
            raise TypeError("right-hand side entries must be integers")
    aug = [list(row) + [b[i]] for i, row in enumerate(m)]
    prev = 1
    for k in range(n - 1):
        if aug[k][k] == 0:
            for r in range(k + 1, n):
                if aug[r][k] != 0:
                    aug[k], aug[r] = aug[r], aug[k]
                    break
            else:
                raise ValueError("matrix is singular")
        pivot = aug[k][k]
        top = aug[k]
        for i in range(k + 1, n):
            row = aug[i]
            lead = row[k]
            for j in range(k + 1, n + 1):
                row[j] = (pivot * row[j] - lead * top[j]) // prev
            row[k] = 0
        prev = pivot
    if n > 0 and aug[n - 1][n - 1] == 0:
        raise ValueError("matrix is singular")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(aug[i][n])
        for j in range(i + 1, n):
            acc -= aug[i][j] * x[j]
        x[i] = acc / aug[i][i]
    return x


def principal_submatrix(m, keep):
    """Rows and columns restricted to the 1-indexed, ascending ``keep`` list."""
    n = _require_square(m)
    prev = 0
    for idx in keep:
        if not 1 <= idx <= n:
            raise ValueError(f"index {idx} out of range 1..{n}")
        if idx <= prev:
            raise ValueError("keep indices must be distinct and ascending")
        prev = idx
    return [[m[i - 1][j - 1] for j in keep] for i in keep]


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees: the Laplacian cofactor with row/column 1
    deleted. Zero for disconnected graphs; one for the single vertex.
    """
    m = laplacian(g)
    return determinant_int(principal_submatrix(m, list(range(2, g.n + 1))))


def is_positive_definite(m) -> bool:
    """Exact test via leading principal minors, all required positive."""
    n = _require_square(m)
    lead = []
    for k in range(1, n + 1):
        lead = [row[:k] for row in m[:k]]
        if determinant_int(lead) <= 0:
            return False
    return True


def inverse_rational(m) -> list:
    """Exact inverse as a matrix of Fractions: adjugate over determinant."""
    det = determinant_int(m)
    if det == 0:
        raise ValueError("matrix is singular")
    adj = adjugate_int(m)
    return [[Fraction(v, det) for v in row] for row in adj]


def plus_diag(m, d):
    """Copy of ``m`` with the vector ``d`` added along the diagonal."""
    n = _require_square(m)
    if len(d) != n:
        raise ValueError("diagonal length does not match matrix size")
    out = [list(row) for row in m]
    for i, v in enumerate(d):
        out[i][i] += v
    return out
