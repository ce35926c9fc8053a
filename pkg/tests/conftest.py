"""Shared helpers for the test suite."""

from mpmath import mp, mpf


def mp_close(a, b, atol):
    """|a - b| <= atol in the ambient mpmath precision."""
    return abs(mp.mpmathify(a) - mp.mpmathify(b)) <= mpf(atol)


def coeffs_close(poly, expected, atol):
    """Compare a MonicPolynomial against a dense low-to-high coefficient list."""
    got = poly.all_coeffs()
    if len(got) != len(expected):
        return False
    return all(abs(g - mp.mpmathify(e)) <= mpf(atol) for g, e in zip(got, expected))
