"""Global maximization of |g(t)| for periodic maps g on [0,1).

The search is a uniform grid scan followed by golden-section refinement of
every local maximizer bracket.  Grid nodes sit at half steps so that
parameter values where a curve is non-smooth (vertices, cusps, crossings,
always rational of the form k/m) are never sampled directly.
"""

from mpmath import mp, mpf, arg


def _inv_golden():
    return (mp.sqrt(5) - 1) / 2


def golden_section_maximize(fn, lo, hi, width):
    """Refine a bracket [lo, hi] around a single interior maximum of fn.

    Returns (x, fn(x)).  Stops once the bracket is narrower than ``width``.
    """
    invphi = _inv_golden()
    invphi2 = invphi * invphi
    a, b = mpf(lo), mpf(hi)
    h = b - a
    c = a + invphi2 * h
    d = a + invphi * h
    yc = fn(c)
    yd = fn(d)
    while h > width:
        if yc > yd:
            b, d, yd = d, c, yc
            h = invphi * h
            c = a + invphi2 * h
            yc = fn(c)
        else:
            a, c, yc = c, d, yd
            h = invphi * h
            d = a + invphi * h
            yd = fn(d)
    if yc > yd:
        return c, yc
    return d, yd


MAX_REFINEMENTS = 64


def search_from_samples(absfn, tgrid, values, width):
    """Pick the global maximum given |g| sampled on a cyclic grid.

    ``values[i]`` must equal absfn(tgrid[i]).  Cyclic local maxima are
    refined by golden-section search on the surrounding bracket, largest
    sample first, at most ``MAX_REFINEMENTS`` of them; bumps at rounding
    level relative to the sample are kept unrefined (this is what a
    constant |g| looks like after finite-precision evaluation).  Ties
    resolve to the smallest parameter.
    """
    G = len(tgrid)
    flat_tol = mpf(10) ** (8 - mp.dps)
    best_x = tgrid[0]
    best_v = values[0]
    brackets = []
    for i in range(G):
        vm = values[(i - 1) % G]
        vp = values[(i + 1) % G]
        if values[i] < vm or values[i] < vp:
            continue
        if values[i] - min(vm, vp) <= values[i] * flat_tol:
            # flat run (or rounding noise); keep the raw sample
            if values[i] > best_v or (values[i] == best_v and tgrid[i] < best_x):
                best_x, best_v = tgrid[i], values[i]
        else:
            brackets.append(i)
    brackets.sort(key=lambda i: (-values[i], tgrid[i]))
    for i in brackets[:MAX_REFINEMENTS]:
        lo = tgrid[i] - (tgrid[i] - tgrid[(i - 1) % G]) % 1
        hi = tgrid[i] + (tgrid[(i + 1) % G] - tgrid[i]) % 1
        x, v = golden_section_maximize(absfn, lo, hi, width)
        x = x % 1
        if v > best_v or (v == best_v and x < best_x):
            best_x, best_v = x, v
    for i in brackets[MAX_REFINEMENTS:]:
        if values[i] > best_v or (values[i] == best_v and tgrid[i] < best_x):
            best_x, best_v = tgrid[i], values[i]
    return best_x, best_v


def default_grid(n_basis):
    return max(4096, 64 * max(n_basis, 1))


def grid_points(G):
    step = mpf(1) / G
    return [(i + mpf(1) / 2) * step for i in range(G)]


def global_max_search(g, singular_params=(), grid_size=4096, width=None):
    """Maximize |g(t)| over the periodic unit interval.

    Returns (x, theta, value) with value = |g(x)| and theta = arg g(x)
    mapped to [0, 2*pi).  ``width`` is the golden-section bracket target;
    the default ties it to the working precision.
    """
    if width is None:
        width = mpf(10) ** (-min(2 * 30, mp.dps - 5))
    tgrid = grid_points(grid_size)
    absfn = lambda t: abs(g(t))
    values = [absfn(t) for t in tgrid]
    x, value = search_from_samples(absfn, tgrid, values, width)
    theta = arg(g(x)) % (2 * mp.pi)
    return x, theta, value
