"""
Exact integer and rational linear algebra.

Matrices are plain sequences of rows of Python ints (arbitrary precision).
Nothing in here touches floating point: determinants come from Bareiss'
fraction-free elimination, linear solves run over ``fractions.Fraction``,
and the Smith normal form tracks its unimodular transforms explicitly.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import SingularMatrixError

Matrix = Tuple[Tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    """Freeze ``rows`` into a tuple-of-tuples matrix, checking it is rectangular."""
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if not out or not out[0]:
        raise ValueError("matrix must have at least one row and one column")
    width = len(out[0])
    if any(len(row) != width for row in out):
        raise ValueError("matrix rows have unequal lengths")
    return out


def _require_square(A: Matrix) -> int:
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError(f"expected a square matrix, got {n}x{len(A[0])}")
    return n


def is_symmetric(A: Sequence[Sequence[int]]) -> bool:
    n = len(A)
    return all(len(row) == n for row in A) and all(
        A[i][j] == A[j][i] for i in range(n) for j in range(i + 1, n)
    )


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def matvec(A: Sequence[Sequence], x: Sequence) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, x)) for row in A)


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss elimination with row pivoting."""
    M = [list(row) for row in as_matrix(A)]
    n = _require_square(tuple(map(tuple, M)))
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def leading_principal_minors(A: Sequence[Sequence[int]]) -> List[int]:
    """
    Minors M_1, ..., M_n of the leading k x k submatrices.

    A single pivot-free Bareiss pass produces all of them on its diagonal.
    If that pass meets a zero pivot the remaining minors are computed one
    at a time with the pivoting determinant.
    """
    A = as_matrix(A)
    n = _require_square(A)
    M = [list(row) for row in A]
    minors = []
    prev = 1
    for k in range(n):
        if M[k][k] == 0 and k < n - 1:
            minors.append(0)
            minors.extend(determinant([row[:s] for row in A[:s]]) for s in range(k + 2, n + 1))
            return minors
        minors.append(M[k][k])
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return minors


def is_negative_definite(A: Sequence[Sequence[int]]) -> bool:
    """Sylvester's criterion: (-1)^k M_k > 0 for every leading minor."""
    A = as_matrix(A)
    _require_square(A)
    if not is_symmetric(A):
        raise ValueError("negative definiteness is only defined here for symmetric matrices")
    return all((-1) ** k * m > 0 for k, m in enumerate(leading_principal_minors(A), start=1))


def solve_exact(A: Sequence[Sequence[int]], b: Sequence) -> Tuple[Fraction, ...]:
    """Unique rational solution of A x = b for nonsingular square A."""
    A = as_matrix(A)
    n = _require_square(A)
    if len(b) != n:
        raise ValueError(f"right-hand side has length {len(b)}, expected {n}")
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return tuple(row[n] for row in M)


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V == D with U, V unimodular and diag(D) a divisibility chain."""

    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]))))


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithDecomposition:
    """
    Smith normal form by row/column reduction.

    The pivot at each stage is the entry of smallest nonzero absolute value
    in the trailing submatrix, first in row-major order, so U and V are
    reproducible.
    """
    D = [list(row) for row in as_matrix(A)]
    m, n = len(D), len(D[0])
    U = [list(row) for row in identity(m)]
    V = [list(row) for row in identity(n)]

    def add_row(dst, src, q):
        # row_dst -= q * row_src
        D[dst] = [x - q * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] != 0 and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, D[i][t] // p)
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, D[t][j] // p)
            if any(D[i][t] for i in range(t + 1, m)) or any(D[t][j] for j in range(t + 1, n)):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            # pull the offending row up; the next pass finds a smaller remainder
            add_row(t, bad, -1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]

    return SmithDecomposition(as_matrix(U), as_matrix(D), as_matrix(V))
