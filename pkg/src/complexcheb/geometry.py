"""Parametrized boundary curves with exact logarithmic capacities.

Each family returns a BoundaryCurve: a closed parametrization
gamma : [0,1] -> C of the outer boundary together with its capacity,
rotation/conjugation symmetry metadata, and the parameter values where
the curve fails to be smooth.  Parametrizations are chosen so that the
rotation symmetry acts as a shift by 1/m in the parameter.

Curve parameters (r, alpha, ...) are stored in raw form (int, Fraction,
string, mpf) and converted at evaluation time, so a curve built once can
be evaluated at any working precision.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from mpmath import mp, mpf, mpc

from .errors import ContinuationFailure
from .precision import as_mpf, tol
from .search import global_max_search


@dataclass
class BoundaryCurve:
    label: str
    rotation_order: int
    conjugation_symmetric: bool
    singular_params: tuple
    _eval: callable = field(repr=False)
    _capacity: callable = field(repr=False)

    def eval(self, t):
        """gamma(t) at the current working precision."""
        return self._eval(as_mpf(t) % 1)

    @property
    def capacity(self):
        return self._capacity()


def polygon_curve(m):
    """Regular m-gon with vertices exp(2*pi*i*k/m), uniform per edge."""
    if m < 3:
        raise ValueError("polygon needs m >= 3")

    def ev(t):
        s = t * m
        k = int(mp.floor(s)) % m
        frac = s - mp.floor(s)
        w = 2j * mp.pi / m
        v0 = mp.exp(w * k)
        v1 = mp.exp(w * ((k + 1) % m))
        return v0 + frac * (v1 - v0)

    def cap():
        one = mpf(1)
        side = 2 * mp.sin(mp.pi / m)
        return mp.gamma(one / m) * side / (
            2 ** (1 + mpf(2) / m) * mp.sqrt(mp.pi) * mp.gamma(mpf(1) / 2 + one / m)
        )

    return BoundaryCurve(
        label=f"polygon(m={m})",
        rotation_order=m,
        conjugation_symmetric=True,
        singular_params=tuple(Fraction(k, m) for k in range(m)),
        _eval=ev,
        _capacity=cap,
    )


def hypocycloid_curve(m, r=1):
    """m-cusped hypocycloid, or its exterior level curve for r > 1.

    gamma(t) = u + u**-(m-1) / (m-1) with u = r * exp(2*pi*i*t).
    """
    if m < 3:
        raise ValueError("hypocycloid needs m >= 3")
    if as_mpf(r) < 1:
        raise ValueError("hypocycloid level parameter must satisfy r >= 1")
    at_base = as_mpf(r) == 1

    def ev(t):
        rr = as_mpf(r)
        u = rr * mp.exp(2j * mp.pi * t)
        return u + u ** (-(m - 1)) / (m - 1)

    singular = tuple(Fraction(k, m) for k in range(m)) if at_base else ()
    return BoundaryCurve(
        label=f"hypocycloid(m={m}, r={r})",
        rotation_order=m,
        conjugation_symmetric=True,
        singular_params=singular,
        _eval=ev,
        _capacity=lambda: as_mpf(r),
    )


def lune_curve(alpha, r=1):
    """Circular lune with vertices at +-alpha and exterior angle alpha*pi.

    gamma(t) = alpha * (1 + u**alpha) / (1 - u**alpha) with
    u = (w - 1)/(w + 1), w = r * exp(2*pi*i*t), principal branch.
    For r > 1 this is the exterior level curve of the lune.
    """
    a = as_mpf(alpha)
    if not (0 < a <= 2):
        raise ValueError("lune parameter alpha must lie in (0, 2]")
    if as_mpf(r) < 1:
        raise ValueError("lune level parameter must satisfy r >= 1")
    at_base = as_mpf(r) == 1

    def ev(t):
        aa = as_mpf(alpha)
        rr = as_mpf(r)
        if at_base and t == mpf(1) / 2:
            return mpc(-aa)  # w = -1 sends u to infinity; limit is -alpha
        w = rr * mp.exp(2j * mp.pi * t)
        u = (w - 1) / (w + 1)
        ua = u ** aa
        return aa * (1 + ua) / (1 - ua)

    singular = (Fraction(0), Fraction(1, 2)) if at_base else ()
    return BoundaryCurve(
        label=f"lune(alpha={alpha}, r={r})",
        rotation_order=2,
        conjugation_symmetric=True,
        singular_params=singular,
        _eval=ev,
        _capacity=lambda: as_mpf(r),
    )


def power_lemniscate_curve(m, r=1):
    """The lemniscate {z : |z**m - 1| = r**m}, one closed curve for r >= 1.

    Branch k covers t in [k/m, (k+1)/m) via
    z = exp(2*pi*i*k/m) * (1 + r**m * exp(i*theta))**(1/m) with the m-th
    root taken continuously in theta, which glues the branches into a
    single closed parametrization.
    """
    if m < 2:
        raise ValueError("power lemniscate needs m >= 2")
    if as_mpf(r) < 1:
        raise ValueError("r < 1 disconnects the lemniscate")
    at_base = as_mpf(r) == 1

    def ev(t):
        rr = as_mpf(r)
        s = t * m
        k = int(mp.floor(s)) % m
        theta = 2 * mp.pi * (s - mp.floor(s))
        rm = rr ** m
        w = 1 + rm * mp.exp(1j * theta)
        # continuous argument of w: theta + Arg(exp(-i*theta)/r**m + 1)
        # for r > 1; at r = 1 the same formula gives theta/2 modulo the
        # sign flip through the crossing, which the modulus kills.
        carg = theta + mp.arg(1 + mp.exp(-1j * theta) / rm)
        return mp.exp(2j * mp.pi * k / m) * abs(w) ** (mpf(1) / m) * mp.exp(1j * carg / m)

    singular = tuple(Fraction(2 * k + 1, 2 * m) for k in range(m)) if at_base else ()
    return BoundaryCurve(
        label=f"power_lemniscate(m={m}, r={r})",
        rotation_order=m,
        conjugation_symmetric=True,
        singular_params=singular,
        _eval=ev,
        _capacity=lambda: as_mpf(r),
    )


def _poly_eval(coeffs, z):
    s = mpc(0)
    for c in reversed(coeffs):
        s = s * z + c
    return s


def _newton_root(coeffs, dcoeffs, z, target, max_steps=50):
    """Newton iteration for P(z) = target from a nearby guess."""
    scale = abs(target) + 1
    for _ in range(max_steps):
        g = _poly_eval(coeffs, z) - target
        if abs(g) <= scale * tol(8):
            return z
        dg = _poly_eval(dcoeffs, z)
        if dg == 0:
            break
        z = z - g / dg
    g = _poly_eval(coeffs, z) - target
    if abs(g) <= scale * tol(6):
        return z
    raise ContinuationFailure("Newton correction did not converge; rho may be too close to a critical value")


def polynomial_lemniscate_curve(poly, rho, critical_values=None, nodes_per_branch=720):
    """Level curve {z : |P(z)| = rho} traced by root continuation.

    ``poly`` is a coefficient sequence a_0..a_d (low to high) or an object
    with an ``all_coeffs()`` method.  ``rho`` must exceed the largest
    critical value modulus of P so the level set is a single Jordan
    curve; critical values are computed from the roots of P' unless
    supplied by the caller.
    """
    if hasattr(poly, "all_coeffs"):
        coeffs = list(poly.all_coeffs())
    else:
        coeffs = [mpc(c) for c in poly]
    d = len(coeffs) - 1
    if d < 1:
        raise ValueError("need a polynomial of degree >= 1")
    lead = coeffs[-1]
    rho_raw = rho
    rho = as_mpf(rho)

    from .zeros import _aberth_roots  # local import, zeros is independent

    dcoeffs = [coeffs[k] * k for k in range(1, d + 1)]
    if critical_values is None:
        if d >= 2:
            crit_pts = _aberth_roots(dcoeffs)
            critical_values = [_poly_eval(coeffs, z) for z in crit_pts]
        else:
            critical_values = []
    max_crit = max((abs(c) for c in critical_values), default=mpf(0))
    if rho <= max_crit:
        raise ValueError(f"rho={rho} must exceed the largest critical value modulus {max_crit}")

    # trace the d root branches of P(z) = rho * exp(i*theta)
    start = _aberth_roots([coeffs[0] - rho] + coeffs[1:])
    G = nodes_per_branch
    dtheta = 2 * mp.pi / G
    table = []
    for z0 in start:
        branch = [z0]
        prev2 = None
        for i in range(1, G + 1):
            target = rho * mp.exp(1j * dtheta * i)
            guess = branch[-1]
            if prev2 is not None:
                guess = 2 * branch[-1] - prev2  # secant predictor
            prev2 = branch[-1]
            branch.append(_newton_root(coeffs, dcoeffs, guess, target))
        table.append(branch)

    # monodromy: branch k ends where branch sigma(k) starts
    sigma = []
    for k in range(d):
        end = table[k][G]
        j = min(range(d), key=lambda i: abs(table[i][0] - end))
        sigma.append(j)
    visit = [0]
    while len(visit) < d:
        nxt = sigma[visit[-1]]
        if nxt in visit:
            raise ContinuationFailure("branch monodromy is not a single cycle; the level set is disconnected")
        visit.append(nxt)

    exponent_gaps = [d - k for k in range(d) if coeffs[k] != 0]
    rot = gcd(*exponent_gaps) if exponent_gaps else d
    conj_sym = all(abs(c.imag) == 0 for c in coeffs)

    def ev(t):
        s = t * d
        j = int(mp.floor(s)) % d
        theta = 2 * mp.pi * (s - mp.floor(s))
        b = visit[j]
        i = int(mp.nint(theta / dtheta))
        guess = table[b][min(i, G)]
        target = as_mpf(rho_raw) * mp.exp(1j * theta)
        return _newton_root(coeffs, dcoeffs, guess, target)

    def cap():
        return (as_mpf(rho_raw) / abs(lead)) ** (mpf(1) / d)

    return BoundaryCurve(
        label=f"polynomial_lemniscate(d={d}, rho={rho_raw})",
        rotation_order=rot,
        conjugation_symmetric=conj_sym,
        singular_params=(),
        _eval=ev,
        _capacity=cap,
    )


def max_modulus(curve, grid_size=4096):
    """max over t of |gamma(t)|, by grid scan plus golden-section refinement."""
    _, _, value = global_max_search(curve.eval, curve.singular_params, grid_size)
    return value
