"""Precision scoping and the pivoted LU kernel."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf, mpc

from complexcheb import set_precision, lu_solve, lu_solve_transposed
from complexcheb.errors import SingularMatrix
from complexcheb.precision import as_mpf, lu_factor, lu_solve_factored, tol


def test_set_precision_scopes_and_restores():
    outer = mp.dps
    with set_precision(50):
        assert mp.dps == 50
        with set_precision(20):
            assert mp.dps == 20
        assert mp.dps == 50
    assert mp.dps == outer


def test_set_precision_restores_on_exception():
    outer = mp.dps
    with pytest.raises(RuntimeError):
        with set_precision(40):
            raise RuntimeError("boom")
    assert mp.dps == outer


def test_set_precision_rejects_low_digits():
    with pytest.raises(ValueError):
        with set_precision(10):
            pass


def test_tol_tracks_working_precision():
    with set_precision(30):
        assert tol(8) == mpf(10) ** -22
    with set_precision(60):
        assert tol(0) == mpf(10) ** -60


def test_as_mpf_routes_fractions_exactly():
    with set_precision(40):
        x = as_mpf(Fraction(1, 3))
        assert abs(x - mpf(1) / 3) == 0
        assert as_mpf("0.5") == mpf(1) / 2
        assert as_mpf(2) == 2


def test_lu_solve_known_system():
    A = [[mpf(2), mpf(1)], [mpf(1), mpf(3)]]
    x = lu_solve(A, [mpf(5), mpf(10)])
    assert abs(x[0] - 1) < tol(5)
    assert abs(x[1] - 3) < tol(5)


def test_lu_solve_needs_pivoting():
    # zero in the leading position forces a row swap
    A = [[mpf(0), mpf(1)], [mpf(1), mpf(0)]]
    x = lu_solve(A, [mpf(3), mpf(7)])
    assert abs(x[0] - 7) < tol(5)
    assert abs(x[1] - 3) < tol(5)


def test_lu_solve_complex_entries():
    A = [[mpc(1, 1), mpc(0)], [mpc(0), mpc(0, 2)]]
    x = lu_solve(A, [mpc(2, 0), mpc(0, 4)])
    assert abs(x[0] - mpc(1, -1)) < tol(5)
    assert abs(x[1] - 2) < tol(5)


def test_lu_solve_transposed_matches_direct_transpose():
    A = [[mpf(2), mpf(-1), mpf(4)],
         [mpf(1), mpf(5), mpf(0)],
         [mpf(-3), mpf(2), mpf(7)]]
    b = [mpf(1), mpf(2), mpf(3)]
    At = [[A[j][i] for j in range(3)] for i in range(3)]
    xt = lu_solve_transposed(A, b)
    xd = lu_solve(At, b)
    assert all(abs(p - q) < tol(5) for p, q in zip(xt, xd))


def test_singular_matrix_raises():
    A = [[mpf(1), mpf(2)], [mpf(2), mpf(4)]]
    with pytest.raises(SingularMatrix):
        lu_factor(A)


def test_non_square_rejected():
    with pytest.raises(ValueError):
        lu_factor([[mpf(1), mpf(2)]])
    with pytest.raises(ValueError):
        lu_solve([[mpf(1)]], [mpf(1), mpf(2)])


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=16, max_size=16),
       st.lists(st.integers(-9, 9), min_size=4, max_size=4))
def test_lu_roundtrip_random_integer_systems(entries, xs):
    """For exactly-invertible integer matrices, solving A x = A @ x0 recovers x0."""
    A_int = [entries[4 * i:4 * i + 4] for i in range(4)]
    # exact integer determinant by Fraction elimination
    M = [[Fraction(v) for v in row] for row in A_int]
    det = Fraction(1)
    for k in range(4):
        p = next((i for i in range(k, 4) if M[i][k] != 0), None)
        if p is None:
            det = Fraction(0)
            break
        if p != k:
            M[k], M[p] = M[p], M[k]
            det = -det
        det *= M[k][k]
        for i in range(k + 1, 4):
            f = M[i][k] / M[k][k]
            for j in range(k, 4):
                M[i][j] -= f * M[k][j]
    if det == 0:
        return
    with set_precision(30):
        A = [[mpf(v) for v in row] for row in A_int]
        b = [sum(A[i][j] * xs[j] for j in range(4)) for i in range(4)]
        LU, piv = lu_factor(A)
        sol = lu_solve_factored(LU, piv, b)
        scale = max(1, max(abs(x) for x in xs))
        assert all(abs(s - x) < scale * tol(12) for s, x in zip(sol, xs))
