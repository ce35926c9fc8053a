"""Symmetry-reduced bases and monic polynomial containers."""

import pytest
from mpmath import mp, mpf, mpc

from complexcheb import (
    BasisSpec,
    MonicPolynomial,
    assemble_polynomial,
    build_basis,
    hypocycloid_curve,
    lune_curve,
    polygon_curve,
    set_precision,
)
from complexcheb.geometry import BoundaryCurve


def unsymmetric_circle():
    """A unit circle whose metadata claims no symmetry at all."""
    return BoundaryCurve(
        label="bare circle",
        rotation_order=1,
        conjugation_symmetric=False,
        singular_params=(),
        _eval=lambda t: mp.exp(2j * mp.pi * t),
        _capacity=lambda: mpf(1),
    )


def test_monic_polynomial_basics():
    p = MonicPolynomial(3, [mpc(-6), mpc(11), mpc(-6)])
    assert p(1) == 0 and p(2) == 0 and p(3) == 0
    assert p.all_coeffs() == [mpc(-6), mpc(11), mpc(-6), mpc(1)]
    assert p.coeff(3) == 1
    assert p.coeff(7) == 0
    assert p.derivative_coeffs() == [mpc(11), mpc(-12), mpc(3)]
    with pytest.raises(ValueError):
        MonicPolynomial(2, [mpc(1)])


def test_exponent_selection_by_rotation_order():
    spec = build_basis(polygon_curve(5), 12)   # l = 12 mod 5 = 2
    assert spec.exponents == (2, 7)
    assert spec.residue == 2
    assert spec.n_basis == 2
    spec = build_basis(hypocycloid_curve(3), 10)  # l = 1
    assert spec.exponents == (1, 4, 7)
    spec = build_basis(lune_curve(1), 4)  # order-2 rotation, l = 0
    assert spec.exponents == (0, 2)


def test_full_basis_without_symmetry():
    spec = build_basis(polygon_curve(5), 6, use_symmetry=False)
    assert spec.exponents == tuple(range(6))
    assert spec.rotation_order == 1
    assert not spec.complex_parts  # conjugation symmetry is a property of the set
    assert spec.n_basis == 6


def test_complex_parts_double_the_basis():
    spec = build_basis(unsymmetric_circle(), 3)
    assert spec.complex_parts
    assert spec.n_basis == 6
    with set_precision(30):
        phis = spec.eval_phi(mpf("0.2"))
        assert len(phis) == 6
        # second half is i times the first half
        for k in range(3):
            assert abs(phis[3 + k] - 1j * phis[k]) == 0


def test_eval_powers_match_direct_powers():
    with set_precision(30):
        spec = build_basis(polygon_curve(4), 9)  # exponents 1, 5
        t = mpf("0.13")
        z = spec.curve.eval(t)
        phis, f = spec.eval_powers(t)
        assert abs(phis[0] - z) < mpf("1e-27")
        assert abs(phis[1] - z ** 5) < mpf("1e-27")
        assert abs(f - z ** 9) < mpf("1e-26")


def test_assemble_polynomial_real_case():
    with set_precision(30):
        spec = build_basis(polygon_curve(4), 9)  # exponents 1, 5
        poly = assemble_polynomial(spec, [mpf(2), mpf(-3)])
        assert poly.degree == 9
        assert poly.coeff(1) == -2
        assert poly.coeff(5) == 3
        assert poly.coeff(0) == 0 and poly.coeff(2) == 0
        # p(z) = z^9 - sum lam_k phi_k(z) by construction
        z = mpc("0.3", "1.1")
        assert abs(poly(z) - (z ** 9 - 2 * z - (-3) * z ** 5)) < mpf("1e-25")


def test_assemble_polynomial_complex_case():
    with set_precision(30):
        spec = build_basis(unsymmetric_circle(), 2)  # exponents 0, 1 doubled
        poly = assemble_polynomial(spec, [mpf(1), mpf(2), mpf(3), mpf(4)])
        assert poly.coeff(0) == mpc(-1, -3)
        assert poly.coeff(1) == mpc(-2, -4)
    with pytest.raises(ValueError):
        assemble_polynomial(spec, [mpf(1)])


def test_build_basis_validation():
    with pytest.raises(ValueError):
        build_basis(polygon_curve(3), 0)
