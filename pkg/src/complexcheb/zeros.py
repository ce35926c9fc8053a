"""Root finding for computed polynomials and zero-location summaries.

Roots come from the Aberth simultaneous iteration, which needs no
eigensolver and works unchanged at any mpmath precision.  Structural
zeros at the origin (exactly-zero low-order coefficients, as produced by
the symmetry-reduced bases) are deflated before iterating.
"""

from dataclasses import dataclass

from mpmath import mp, mpf, mpc

from .errors import NoConvergence
from .precision import tol


@dataclass
class ZeroSet:
    degree: int
    zeros: list       # with multiplicity, length == degree
    residuals: list   # |p(z_j)| per zero


def _horner(coeffs, z):
    s = mpc(0)
    for c in reversed(coeffs):
        s = s * z + c
    return s


def _aberth_roots(coeffs, max_sweeps=500):
    """All roots of sum coeffs[k] z**k (any leading coefficient)."""
    coeffs = [mpc(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    d = len(coeffs) - 1
    if d < 1:
        raise ValueError("need degree >= 1")

    # deflate exact roots at the origin
    k0 = 0
    while coeffs[k0] == 0:
        k0 += 1
    work = coeffs[k0:]
    n = len(work) - 1
    origin = [mpc(0)] * k0
    if n == 0:
        return origin

    lead = work[-1]
    radius = 1 + max(abs(c / lead) for c in work[:-1])
    dwork = [work[k] * k for k in range(1, n + 1)]
    abswork = [abs(c) for c in work]
    # asymmetric start angles so symmetric root sets cannot trap the iteration
    z = [radius * mp.exp(1j * (2 * mp.pi * i / n + mpf(2) / 5)) for i in range(n)]
    target = radius * tol(10)
    for _ in range(max_sweeps):
        new = list(z)
        worst = mpf(0)
        residual_done = True
        for i in range(n):
            p = _horner(work, z[i])
            # multiple roots stall the correction near eps**(1/k); accept once
            # the residual is at the roundoff floor of Horner evaluation
            if abs(p) > abs(_horner(abswork, abs(z[i]))) * tol(6):
                residual_done = False
            dp = _horner(dwork, z[i])
            if dp == 0:
                w = mpc(target)
            else:
                w = p / dp
            s = mpc(0)
            for j in range(n):
                if j != i:
                    s += 1 / (z[i] - z[j])
            denom = 1 - w * s
            corr = w if denom == 0 else w / denom
            new[i] = z[i] - corr
            if abs(corr) > worst:
                worst = abs(corr)
        z = new
        if worst <= target or residual_done:
            return origin + z
    raise NoConvergence(f"Aberth iteration did not reach {target} in {max_sweeps} sweeps")


def _collapse_clusters(zs, cluster_tol):
    """Replace mutually close roots by their centroid, keeping multiplicity."""
    remaining = list(zs)
    out = []
    while remaining:
        seed = remaining.pop(0)
        cluster = [seed]
        changed = True
        while changed:
            changed = False
            for w in list(remaining):
                if any(abs(w - c) <= cluster_tol for c in cluster):
                    cluster.append(w)
                    remaining.remove(w)
                    changed = True
        centroid = sum(cluster) / len(cluster)
        out.extend([centroid] * len(cluster))
    return out


def polynomial_zeros(poly, max_sweeps=500):
    """All zeros of a MonicPolynomial, with multiple roots collapsed.

    The cluster tolerance scales as 10**(-P/4): a root of multiplicity k
    is only computable to about P/k digits, so the tolerance must widen
    with the working precision rather than stay fixed.
    """
    if poly.degree < 1:
        raise ValueError("degree must be >= 1")
    roots = _aberth_roots(poly.all_coeffs(), max_sweeps=max_sweeps)
    cluster_tol = mpf(10) ** (-mp.dps / 4)
    roots = _collapse_clusters(roots, cluster_tol)
    roots.sort(key=lambda z: (z.real, z.imag))
    residuals = [abs(poly(z)) for z in roots]
    return ZeroSet(degree=poly.degree, zeros=roots, residuals=residuals)


@dataclass
class ZeroMeasureSummary:
    degree: int
    diameter: object
    min_distance: object          # closest approach of any zero to the curve
    interior_fractions: dict      # shrink factor -> fraction of deep-interior zeros


def zero_measure_summary(zs, curve, curve_samples=2048, diameter_samples=256):
    """Empirical proxy for how much zero mass sits away from the boundary.

    For each shrink factor s, reports the fraction of zeros farther than
    (1 - s) * diameter from the sampled curve, plus the minimum distance
    of any zero to the curve.
    """
    pts = [curve.eval(mpf(i) / curve_samples) for i in range(curve_samples)]
    coarse = pts[:: max(1, curve_samples // diameter_samples)]
    diam = max(abs(a - b) for i, a in enumerate(coarse) for b in coarse[i + 1:])
    dists = [min(abs(z - p) for p in pts) for z in zs.zeros]
    fractions = {}
    for s in (mpf("0.5"), mpf("0.75"), mpf("0.9")):
        cut = (1 - s) * diam
        fractions[s] = mpf(sum(1 for d in dists if d > cut)) / len(dists)
    return ZeroMeasureSummary(
        degree=zs.degree,
        diameter=diam,
        min_distance=min(dists),
        interior_fractions=fractions,
    )
