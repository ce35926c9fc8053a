"""Configurable-precision arithmetic and dense linear algebra.

All numbers are mpmath ``mpf``/``mpc`` values computed at the precision of
the ambient mpmath context.  ``set_precision`` scopes a computation to a
given number of decimal digits; everything downstream (curves, solver,
root finder) inherits it.

Matrices are plain lists of row lists.  The LU routines implement partial
(row) pivoting with a singularity test relative to the largest entry of
the original matrix, which keeps the test meaningful across the very
different scales of the boundary curves we feed in.
"""

from contextlib import contextmanager
from fractions import Fraction

from mpmath import mp, mpf, mpmathify

from .errors import SingularMatrix

MIN_DIGITS = 15


@contextmanager
def set_precision(digits):
    """Context manager running the enclosed block at ``digits`` decimal digits.

    Rejects anything below 15 digits; nothing in this package is usable
    below that.
    """
    if digits < MIN_DIGITS:
        raise ValueError(f"precision must be >= {MIN_DIGITS} digits, got {digits}")
    old = mp.dps
    mp.dps = digits
    try:
        yield mp
    finally:
        mp.dps = old


def working_digits():
    return mp.dps


def tol(offset):
    """10**(offset - P) at the current working precision P."""
    return mpf(10) ** (offset - mp.dps)


def as_mpf(x):
    """Convert to mpf, routing Fractions exactly and strings decimally."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpmathify(x)


def lu_factor(A):
    """LU factorization with partial pivoting.

    Returns (LU, piv) where LU stores both factors in place and piv is the
    row permutation.  Raises SingularMatrix when a pivot falls below
    10**(10-P) times the largest entry of the input matrix.
    """
    n = len(A)
    LU = [list(row) for row in A]
    for row in LU:
        if len(row) != n:
            raise ValueError("lu_factor requires a square matrix")
    scale = max((abs(e) for row in LU for e in row), default=mpf(0))
    threshold = scale * tol(10)
    piv = list(range(n))
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(LU[i][k]))
        if abs(LU[p][k]) <= threshold:
            raise SingularMatrix(f"pivot {k} below threshold {threshold}")
        if p != k:
            LU[k], LU[p] = LU[p], LU[k]
            piv[k], piv[p] = piv[p], piv[k]
        pivval = LU[k][k]
        for i in range(k + 1, n):
            m = LU[i][k] / pivval
            LU[i][k] = m
            if m:
                row_i, row_k = LU[i], LU[k]
                for j in range(k + 1, n):
                    row_i[j] -= m * row_k[j]
    return LU, piv


def lu_solve_factored(LU, piv, b):
    """Solve A x = b given the output of lu_factor."""
    n = len(LU)
    x = [b[piv[i]] for i in range(n)]
    for i in range(1, n):
        s = x[i]
        row = LU[i]
        for j in range(i):
            s -= row[j] * x[j]
        x[i] = s
    for i in reversed(range(n)):
        s = x[i]
        row = LU[i]
        for j in range(i + 1, n):
            s -= row[j] * x[j]
        x[i] = s / row[i]
    return x


def lu_solve_transposed_factored(LU, piv, b):
    """Solve A^T x = b reusing the factorization of A.

    A = P^T L U, so A^T = U^T L^T P and we solve U^T y = b, L^T z = y,
    then undo the permutation.
    """
    n = len(LU)
    y = list(b)
    for i in range(n):
        s = y[i]
        for j in range(i):
            s -= LU[j][i] * y[j]
        y[i] = s / LU[i][i]
    for i in reversed(range(n)):
        s = y[i]
        for j in range(i + 1, n):
            s -= LU[j][i] * y[j]
        y[i] = s
    x = [None] * n
    for i in range(n):
        x[piv[i]] = y[i]
    return x


def lu_solve(A, b):
    """Solve A x = b by partial-pivoting LU."""
    if len(b) != len(A):
        raise ValueError("right-hand side length does not match matrix")
    LU, piv = lu_factor(A)
    return lu_solve_factored(LU, piv, b)


def lu_solve_transposed(A, b):
    """Solve A^T x = b, factoring A (not its transpose)."""
    if len(b) != len(A):
        raise ValueError("right-hand side length does not match matrix")
    LU, piv = lu_factor(A)
    return lu_solve_transposed_factored(LU, piv, b)
