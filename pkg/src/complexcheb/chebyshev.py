"""Chebyshev polynomials, sup norms and Widom factors per set and degree."""

from dataclasses import dataclass

from mpmath import mpf

from . import remez
from .basis import build_basis, assemble_polynomial
from .precision import set_precision
from .search import global_max_search, default_grid


@dataclass
class ChebyshevRecord:
    label: str
    degree: int
    polynomial: object
    sup_norm: object
    capacity: object
    widom: object
    rel_error: object
    digits: int
    threshold: object
    iterations: int = 0
    error: str = ""

    @property
    def failed(self):
        return bool(self.error)


def chebyshev(curve, N, threshold="1e-10", precision=60, use_symmetry=True,
              grid_size=None):
    """Compute the monic minimizer of degree N on ``curve``.

    Runs the exchange solver on the symmetry-reduced basis, assembles the
    monic polynomial, and reports the Widom factor
    sup_norm / capacity**N.  The sup norm reuses the solver's certified
    upper bound.
    """
    with set_precision(precision):
        spec = build_basis(curve, N, use_symmetry=use_symmetry)
        result = remez.solve(spec, threshold=mpf(threshold), grid_size=grid_size)
        poly = assemble_polynomial(spec, result.lam)
        norm = result.upper_bound
        cap = curve.capacity
        return ChebyshevRecord(
            label=curve.label,
            degree=N,
            polynomial=poly,
            sup_norm=norm,
            capacity=cap,
            widom=norm / cap ** N,
            rel_error=result.rel_error,
            digits=precision,
            threshold=mpf(threshold),
            iterations=result.iterations,
        )


def widom_table(curve, degrees, threshold="1e-10", precision=60, use_symmetry=True):
    """One ChebyshevRecord per degree, in input order.

    A failing degree is recorded with its error message and the run
    continues.
    """
    if not degrees:
        raise ValueError("degrees must be nonempty")
    records = []
    for N in degrees:
        try:
            records.append(chebyshev(curve, N, threshold, precision, use_symmetry))
        except Exception as exc:  # noqa: BLE001 - per-degree isolation is the contract
            records.append(ChebyshevRecord(
                label=curve.label, degree=N, polynomial=None,
                sup_norm=None, capacity=None, widom=None, rel_error=None,
                digits=precision, threshold=mpf(threshold),
                error=f"{type(exc).__name__}: {exc}",
            ))
    return records


def sup_norm(poly, curve, grid_size=None):
    """max over the curve of |poly(gamma(t))| by direct search."""
    if grid_size is None:
        grid_size = default_grid(poly.degree)
    _, _, value = global_max_search(
        lambda t: poly(curve.eval(t)), curve.singular_params, grid_size)
    return value
