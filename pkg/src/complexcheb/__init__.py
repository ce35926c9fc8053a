"""Complex Chebyshev polynomials on parametrized compact sets.

Computes monic minimal-sup-norm polynomials on boundary curves via a
generalized Remez exchange, together with Widom factors, Faber
polynomials of the in-scope families, coefficient distances on level
curves, and zero sets.
"""

__version__ = "0.1.0"

from .basis import BasisSpec, MonicPolynomial, assemble_polynomial, build_basis
from .chebyshev import ChebyshevRecord, chebyshev, sup_norm, widom_table
from .errors import (
    BadConfig,
    ComplexChebError,
    ContinuationFailure,
    ExchangeFailure,
    InitFailure,
    NoConvergence,
    NonpositiveLowerBound,
    SingularMatrix,
)
from .faber import (
    LaurentMap,
    SweepResult,
    coeff_inf_distance,
    faber_connection_sweep,
    faber_polynomials,
    laurent_of,
)
from .geometry import (
    BoundaryCurve,
    hypocycloid_curve,
    lune_curve,
    max_modulus,
    polygon_curve,
    polynomial_lemniscate_curve,
    power_lemniscate_curve,
)
from .precision import lu_solve, lu_solve_transposed, set_precision
from .remez import (
    ReferenceState,
    RemezResult,
    assemble_A,
    assemble_cf,
    exchange_step,
    global_max_search,
    initialize_reference,
    solve,
    trial_coefficients,
)
from .zeros import ZeroSet, polynomial_zeros, zero_measure_summary
