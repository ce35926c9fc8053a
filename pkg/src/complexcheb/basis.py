"""Real-linear approximation bases and monic polynomials.

To compute the degree-N minimizer on a curve gamma we approximate
f(t) = gamma(t)**N from the span of lower-order monomials.  Conjugation
symmetry makes all coefficients real (dropping the i*z**k companions) and
rotation symmetry of order m restricts the exponents to the residue class
of N mod m, so the basis shrinks from 2N real functions to N/m in the
best case.
"""

from dataclasses import dataclass

from mpmath import mpc


@dataclass
class MonicPolynomial:
    """Monic polynomial: z**degree + sum a_k z**k, k < degree.

    The leading 1 is implicit and never stored.
    """

    degree: int
    coeffs: list  # a_0 .. a_{degree-1}, mpc

    def __post_init__(self):
        if len(self.coeffs) != self.degree:
            raise ValueError("coefficient count must equal the degree")
        self.coeffs = [mpc(c) for c in self.coeffs]

    def __call__(self, z):
        s = mpc(1)
        for c in reversed(self.coeffs):
            s = s * z + c
        return s

    def all_coeffs(self):
        """a_0 .. a_{degree}, including the leading 1."""
        return self.coeffs + [mpc(1)]

    def coeff(self, k):
        if k == self.degree:
            return mpc(1)
        if 0 <= k < self.degree:
            return self.coeffs[k]
        return mpc(0)

    def derivative_coeffs(self):
        return [self.coeffs[k] * k for k in range(1, self.degree)] + [mpc(self.degree)]


@dataclass
class BasisSpec:
    """Basis {phi_k} and target f for one minimax problem on a curve."""

    curve: object
    degree: int
    exponents: tuple
    complex_parts: bool
    rotation_order: int
    residue: int

    @property
    def n_basis(self):
        return len(self.exponents) * (2 if self.complex_parts else 1)

    def eval_powers(self, t):
        """gamma(t)**e for each basis exponent plus the target gamma(t)**N."""
        z = self.curve.eval(t)
        powers = {0: mpc(1), 1: z}
        need = sorted(set(self.exponents) | {self.degree})
        p = z
        k = 1
        for e in need:
            while k < e:
                p = p * z
                k += 1
            powers[e] = p if e > 0 else mpc(1)
        return [powers[e] for e in self.exponents], powers[self.degree]

    def eval_phi(self, t):
        phis, _ = self.eval_powers(t)
        if self.complex_parts:
            phis = phis + [1j * p for p in phis]
        return phis

    def eval_f(self, t):
        _, f = self.eval_powers(t)
        return f

    def eval_phi_f(self, t):
        phis, f = self.eval_powers(t)
        if self.complex_parts:
            phis = phis + [1j * p for p in phis]
        return phis, f


def build_basis(curve, N, use_symmetry=True):
    """Basis for the degree-N problem on ``curve``.

    With ``use_symmetry`` the rotation order m of the curve restricts the
    exponents to {l, m+l, ...} with l = N mod m; conjugation symmetry
    drops the imaginary companions.  Either reduction can be switched off
    to validate against the full basis.
    """
    if N < 1:
        raise ValueError("degree must be >= 1")
    m = curve.rotation_order if use_symmetry else 1
    l = N % m
    if m > 1:
        exponents = tuple(range(l, N, m))
    else:
        exponents = tuple(range(N))
    complex_parts = not curve.conjugation_symmetric
    return BasisSpec(
        curve=curve,
        degree=N,
        exponents=exponents,
        complex_parts=complex_parts,
        rotation_order=m,
        residue=l,
    )


def assemble_polynomial(spec, lam):
    """Monic polynomial z**N - sum over basis exponents of solved coefficients."""
    if len(lam) != spec.n_basis:
        raise ValueError(f"expected {spec.n_basis} coefficients, got {len(lam)}")
    K = len(spec.exponents)
    coeffs = [mpc(0)] * spec.degree
    for k, e in enumerate(spec.exponents):
        c = mpc(lam[k])
        if spec.complex_parts:
            c = c + 1j * lam[k + K]
        coeffs[e] = -c
    return MonicPolynomial(spec.degree, coeffs)
