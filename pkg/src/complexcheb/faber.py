"""Faber polynomials from Laurent data of the inverse exterior map.

The map is stored as Psi(w) = c*w + b_0 + sum b_k w**-k.  Monic Faber
polynomials follow from the coefficient recurrence

    F_{n+1}(z) = z*F_n(z) - sum_{j=0..n} bt_j F_{n-j}(z) - n*bt_n,

with bt_j = c**j * b_j, which is exact for truncated Laurent maps and is
validated against three independent closed forms in the tests.  The
coefficient distance between Chebyshev and Faber polynomials on level
curves quantifies how quickly the two families merge as the level grows.
"""

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf, mpc, binomial

from .basis import MonicPolynomial
from .chebyshev import chebyshev
from .geometry import hypocycloid_curve, lune_curve, power_lemniscate_curve
from .precision import set_precision


@dataclass
class LaurentMap:
    capacity: object           # c > 0
    coefficients: list         # b_0 .. b_K
    label: str = ""

    @property
    def truncation_order(self):
        return len(self.coefficients) - 1


SUPPORTED_FAMILIES = ("hypocycloid", "power-lemniscate", "lune")


def laurent_of(family, m=2, K=32):
    """Closed-form Laurent data for the in-scope families.

    ``lune`` supports only the half lune (alpha = 1/2), whose exterior
    map is (w + sqrt(w**2 - 1))/2; the others hold for any m.
    All three families have capacity 1.
    """
    b = [mpf(0)] * (K + 1)
    if family == "hypocycloid":
        if m < 3:
            raise ValueError("hypocycloid needs m >= 3")
        if m - 1 <= K:
            b[m - 1] = mpf(1) / (m - 1)
        label = f"hypocycloid(m={m})"
    elif family == "power-lemniscate":
        if m < 2:
            raise ValueError("power lemniscate needs m >= 2")
        # Psi(w) = (w**m + 1)**(1/m) = w * sum binomial(1/m, k) w**(-m k)
        k = 1
        while m * k - 1 <= K:
            b[m * k - 1] = binomial(mpf(1) / m, k)
            k += 1
        label = f"power_lemniscate(m={m})"
    elif family == "lune":
        # Psi(w) = (w + sqrt(w**2 - 1))/2
        k = 1
        while 2 * k - 1 <= K:
            b[2 * k - 1] = (-1) ** k * binomial(mpf(1) / 2, k) / 2
            k += 1
        label = "lune(alpha=1/2)"
    else:
        raise ValueError(f"unsupported family {family!r}; choose from {SUPPORTED_FAMILIES}")
    return LaurentMap(capacity=mpf(1), coefficients=b, label=label)


def faber_polynomials(lmap, N):
    """Monic Faber polynomials F_0 .. F_N for the given Laurent map."""
    if N > lmap.truncation_order:
        raise ValueError(
            f"truncation order {lmap.truncation_order} insufficient for degree {N}")
    c = lmap.capacity
    bt = [c ** j * mpc(bj) for j, bj in enumerate(lmap.coefficients)]
    # dense low-to-high coefficient lists, degree n has n+1 entries
    polys = [[mpc(1)]]
    for n in range(N):
        prev = polys[n]
        new = [mpc(0)] + list(prev)                       # z * F_n
        for j in range(n + 1):
            fj = polys[n - j]
            for i, a in enumerate(fj):
                new[i] -= bt[j] * a
        new[0] -= n * bt[n]
        polys.append(new)
    return [MonicPolynomial(n, p[:-1]) for n, p in enumerate(polys)]


def coeff_inf_distance(P, Q):
    """max_k |a_k(P) - a_k(Q)|, missing coefficients read as zero."""
    top = max(P.degree, Q.degree)
    return max(abs(P.coeff(k) - Q.coeff(k)) for k in range(top + 1))


_LEVEL_CURVES = {
    "hypocycloid": lambda m, r: hypocycloid_curve(m, r),
    "power-lemniscate": lambda m, r: power_lemniscate_curve(m, r),
    "lune": lambda m, r: lune_curve(Fraction(1, 2), r),
}


@dataclass
class SweepPoint:
    r: object
    distance: object = None
    censored: bool = False
    error: str = ""


@dataclass
class SweepResult:
    family: str
    m: int
    degree: int
    points: list
    slope: object  # fitted log-log slope, None if under two usable points


def default_r_grid(count=16, lo="1.25", hi="4"):
    """Log-spaced level parameters, the default sweep grid."""
    lo, hi = mpf(lo), mpf(hi)
    if count == 1:
        return [lo]
    step = (mp.log(hi) - mp.log(lo)) / (count - 1)
    return [mp.exp(mp.log(lo) + i * step) for i in range(count)]


def fit_loglog_slope(pairs):
    """Least-squares slope of log(d) against log(r)."""
    if len(pairs) < 2:
        return None
    xs = [mp.log(r) for r, _ in pairs]
    ys = [mp.log(d) for _, d in pairs]
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    den = sum((x - mx) ** 2 for x in xs)
    return num / den


def faber_connection_sweep(family, N, r_grid=None, threshold="1e-40", precision=80, m=None):
    """Distance between the fixed-degree Faber polynomial and the Chebyshev
    polynomial of the level curve, as a function of the level r.

    Distances at or below the solve threshold are reported censored and
    excluded from the slope fit.  Per-point failures are recorded and the
    sweep continues.
    """
    if family not in _LEVEL_CURVES:
        raise ValueError(f"unsupported family {family!r}")
    if m is None:
        m = 5 if family == "hypocycloid" else 2
    if r_grid is None:
        r_grid = default_r_grid()
    with set_precision(precision):
        r_grid = [mpf(r) if not isinstance(r, str) else mpf(r) for r in r_grid]
        if any(r <= 1 for r in r_grid):
            raise ValueError("sweep levels must satisfy r > 1")
        lmap = laurent_of(family, m=m, K=max(N, 1))
        F = faber_polynomials(lmap, N)[N]
        threshold = mpf(threshold)
        points = []
        for r in r_grid:
            try:
                curve = _LEVEL_CURVES[family](m, r)
                rec = chebyshev(curve, N, threshold=threshold, precision=precision)
                d = coeff_inf_distance(rec.polynomial, F)
                points.append(SweepPoint(r=r, distance=d, censored=d <= threshold))
            except Exception as exc:  # noqa: BLE001 - per-point isolation is the contract
                points.append(SweepPoint(r=r, error=f"{type(exc).__name__}: {exc}"))
        usable = [(p.r, p.distance) for p in points if not p.error and not p.censored]
        slope = fit_loglog_slope(usable)
    return SweepResult(family=family, m=m, degree=N, points=points, slope=slope)
