"""Generalized Remez exchange for complex best approximation.

The dual state is a reference of n+1 parameter points t_j, angles
alpha_j and convex weights r_j representing the linear functional
L(g) = sum r_j Re(exp(-i alpha_j) g(t_j)).  Each iteration solves for
trial coefficients and the dual lower bound h, finds the global extremum
of the error on the curve, and exchanges one reference node, which can
only increase h.  The gap between the sup norm of the trial error and h
certifies the result.
"""

from dataclasses import dataclass

from mpmath import mp, mpf, arg

from .errors import ExchangeFailure, InitFailure, NonpositiveLowerBound, SingularMatrix
from .precision import lu_factor, lu_solve_factored, lu_solve_transposed_factored, tol
from .search import default_grid, grid_points, search_from_samples


@dataclass
class ReferenceState:
    t: list
    alpha: list
    r: list

    @property
    def n_points(self):
        return len(self.t)


@dataclass
class RemezResult:
    lam: list
    lower_bound: object
    upper_bound: object
    rel_error: object
    iterations: int
    final_state: ReferenceState
    trace: list  # (h, upper) per iteration
    converged: bool = True
    states: list = None  # per-iteration references when requested


def assemble_A(tvals, alphas, basis):
    """The (n+1) x (n+1) constraint matrix: a row of ones over Re(e^{-i a} phi_k)."""
    npts = len(tvals)
    rows = [[mpf(1)] * npts]
    cols = [basis.eval_phi(t) for t in tvals]
    phases = [mp.exp(-1j * a) for a in alphas]
    n = basis.n_basis
    for k in range(n):
        rows.append([(phases[j] * cols[j][k]).real for j in range(npts)])
    return rows


def assemble_cf(tvals, alphas, f):
    """Re(exp(-i alpha_j) f(t_j)) for each reference node."""
    return [(mp.exp(-1j * a) * f(t)).real for t, a in zip(tvals, alphas)]


_GOLDEN_FRAC = mpf(
    "0.6180339887498948482045868343656381177203091798057628621354486227"
)


def initialize_reference(basis, f, seed_rule="equispaced"):
    """Deterministic admissible starting reference.

    Nodes start equispaced at (j - 1/2)/(n+1), dodging singular curve
    parameters; angles phase-align with f.  Negative weights are fixed by
    flipping the corresponding angle by pi, which makes all weights
    nonnegative in a single pass.  Retries with fixed golden-ratio shifts
    if the constraint matrix comes out singular.
    """
    if seed_rule != "equispaced":
        raise ValueError(f"unknown seed rule {seed_rule!r}")
    n = basis.n_basis
    npts = n + 1
    singular = [as_frac_mpf(s) for s in getattr(basis.curve, "singular_params", ())]
    base = [(mpf(j) + mpf(1) / 2) / npts for j in range(npts)]

    for attempt in range(11):
        # per-node golden-ratio offsets: a common shift would preserve any
        # rotation symmetry among the nodes that made A singular
        tvals = [
            (t + attempt * ((j + 1) * _GOLDEN_FRAC % 1) / (4 * npts)) % 1
            for j, t in enumerate(base)
        ]
        if any(abs(t - s) < tol(8) for t in tvals for s in singular):
            tvals = [(t + mpf(1) / (4 * npts)) % 1 for t in tvals]
        # phase-aligned angles can make the rows of A exactly dependent on
        # some curves, so retries detune the angles as well
        alphas = [
            (arg(f(t)) + attempt * ((2 * j + 3) * _GOLDEN_FRAC % 1)) % (2 * mp.pi)
            for j, t in enumerate(tvals)
        ]
        try:
            A = assemble_A(tvals, alphas, basis)
            LU, piv = lu_factor(A)
            e1 = [mpf(1)] + [mpf(0)] * n
            r = lu_solve_factored(LU, piv, e1)
            flips = [j for j in range(npts) if r[j] < 0]
            if flips:
                for j in flips:
                    alphas[j] = (alphas[j] + mp.pi) % (2 * mp.pi)
                A = assemble_A(tvals, alphas, basis)
                LU, piv = lu_factor(A)
                r = lu_solve_factored(LU, piv, e1)
            return ReferenceState(t=tvals, alpha=alphas, r=r)
        except SingularMatrix:
            continue
    raise InitFailure("no invertible starting reference after 10 perturbation retries")


def as_frac_mpf(s):
    from fractions import Fraction

    if isinstance(s, Fraction):
        return mpf(s.numerator) / s.denominator
    return mpf(s)


def trial_coefficients(state, basis, f):
    """Solve A^T [h; lambda] = c_f on the current reference."""
    A = assemble_A(state.t, state.alpha, basis)
    LU, piv = lu_factor(A)
    cf = assemble_cf(state.t, state.alpha, f)
    sol = lu_solve_transposed_factored(LU, piv, cf)
    return sol[0], sol[1:]


def global_max_search(err, singular_params=(), grid_size=4096, width=None):
    """(x, theta, value) maximizing |err(t)| over the periodic unit interval."""
    if width is None:
        width = mpf(10) ** (-min(60, mp.dps - 5))
    tgrid = grid_points(grid_size)
    absfn = lambda t: abs(err(t))
    values = [absfn(t) for t in tgrid]
    x, value = search_from_samples(absfn, tgrid, values, width)
    theta = arg(err(x)) % (2 * mp.pi)
    return x, theta, value


def exchange_step(state, basis, x, theta):
    """Swap the extremum (x, theta) into the reference, rebalancing weights."""
    A = assemble_A(state.t, state.alpha, basis)
    LU, piv = lu_factor(A)
    phis = basis.eval_phi(x)
    phase = mp.exp(-1j * theta)
    v = [mpf(1)] + [(phase * p).real for p in phis]
    d = lu_solve_factored(LU, piv, v)
    candidates = [k for k in range(len(d)) if d[k] > 0]
    if not candidates:
        raise ExchangeFailure("no positive exchange direction; extremum may be spurious")
    rho = min(candidates, key=lambda k: (state.r[k] / d[k], k))
    delta = state.r[rho] / d[rho]
    new_r = [state.r[j] - delta * d[j] for j in range(len(d))]
    new_r[rho] = delta
    new_t = list(state.t)
    new_alpha = list(state.alpha)
    new_t[rho] = x
    new_alpha[rho] = theta
    return ReferenceState(t=new_t, alpha=new_alpha, r=new_r)


def solve(basis, f=None, threshold=mpf("1e-10"), max_iter=500, grid_size=None,
          trace_states=False):
    """Run the exchange iteration until the relative duality gap closes.

    ``f`` defaults to the basis target gamma**N.  The extremum search
    caches basis values on a fixed grid; golden-section refinement around
    each local maximum runs until the bracket is narrower than
    threshold**2 (floored near the working precision).  With
    ``trace_states`` a copy of the reference entering each iteration is
    kept on the result, for auditing the exchange invariants.
    """
    threshold = mpf(threshold)
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    use_combined = f is None
    if f is None:
        f = basis.eval_f
    n = basis.n_basis
    if grid_size is None:
        grid_size = default_grid(n)
    width = max(threshold ** 2, mpf(10) ** (10 - mp.dps))

    state = initialize_reference(basis, f)

    tgrid = grid_points(grid_size)
    if use_combined:
        cached = [basis.eval_phi_f(t) for t in tgrid]
        grid_phi = [c[0] for c in cached]
        grid_f = [c[1] for c in cached]
    else:
        grid_phi = [basis.eval_phi(t) for t in tgrid]
        grid_f = [f(t) for t in tgrid]

    def err_at(t, lam):
        phis = basis.eval_phi(t)
        e = f(t)
        for lk, p in zip(lam, phis):
            e -= lk * p
        return e

    trace = []
    states = [] if trace_states else None
    h = None
    lam = None
    upper = None
    nonpos_run = 0
    converged = False
    iterations = 0
    for iteration in range(1, max_iter + 1):
        iterations = iteration
        if trace_states:
            states.append(ReferenceState(t=list(state.t), alpha=list(state.alpha),
                                         r=list(state.r)))
        h, lam = trial_coefficients(state, basis, f)

        values = []
        for i in range(grid_size):
            e = grid_f[i]
            phis = grid_phi[i]
            for lk, p in zip(lam, phis):
                e -= lk * p
            values.append(abs(e))
        absfn = lambda t: abs(err_at(t, lam))
        x, upper = search_from_samples(absfn, tgrid, values, width)
        theta = arg(err_at(x, lam)) % (2 * mp.pi)

        trace.append((h, upper))
        if h > 0:
            nonpos_run = 0
            if upper - h < threshold * h:
                converged = True
                break
        else:
            nonpos_run += 1
            if nonpos_run > 20:
                raise NonpositiveLowerBound(
                    "dual lower bound stayed nonpositive for more than 20 iterations")
            if upper - h < threshold * upper:
                converged = True
                break
        state = exchange_step(state, basis, x, theta)

    rel = (upper - h) / h if h > 0 else mp.inf
    result = RemezResult(
        lam=lam,
        lower_bound=h,
        upper_bound=upper,
        rel_error=rel,
        iterations=iterations,
        final_state=state,
        trace=trace,
        converged=converged,
    )
    result.states = states
    return result
