"""momentjac — complex moments of polynomial images of the disk and their Jacobian.

The moment mapping sends ``P(z) = a_1 z + ... + a_n z^n`` to the exact
rational vector ``(M_0, ..., M_{n-1})``. Its Jacobian determinant is
evaluated by several independent routes that must agree.

Usage::

    from fractions import Fraction
    import momentjac

    P = momentjac.moment_polynomial([1, Fraction(1, 4)])   # z + z^2/4
    momentjac.moment_map(P).values                         # (9/8, 1/4)
    momentjac.jacobian_det_direct(P)                       # 3/2
    momentjac.classify(P).verdict                          # "interior"
"""

from ._version import __version__

# Exact algebra
from ._polycore import (
    LaurentSeries,
    MomentPolynomial,
    RatPoly,
    derivative,
    laurent_coeff,
    mobius_transform,
    reciprocal,
    substitute_inverse,
)
from ._linalg import bareiss_det

# Moments
from ._moments import (
    cauchy_series,
    moment_map,
    moment_polynomial,
    moments_residue,
    moments_richardson,
)

# Structured matrices
from ._structured import (
    build_dual,
    build_h_table,
    build_toeplitz,
    dual_det_exact,
    dual_det_roots,
    h_det,
    symmetric_vandermonde_det,
)

# Hurwitz determinants and resultants
from ._hurwitz import (
    hurwitz_det,
    hurwitz_det_roots,
    hurwitz_matrix,
    mobius_hurwitz_det,
    self_reciprocal_resultant,
    sylvester_resultant,
    v2_explicit,
    v3_explicit,
    v4_explicit,
    v_form_eval,
    v_form_exact,
    w_form,
)

# Jacobian
from ._jacobian import (
    evaluate_routes,
    fd_max_deviation,
    jacobian_det_direct,
    jacobian_det_roots,
    jacobian_det_toeplitz,
    jacobian_det_ullemar,
    jacobian_det_vform,
    jacobian_fd_oracle,
    jacobian_matrix,
    jacobian_sq_resultant,
    partial_moment,
    partial_row_lemma,
)

# Roots
from ._roots import find_roots

# Univalence
from ._univalence import (
    classify,
    dilate,
    is_locally_univalent,
    resultant_sign_witness,
    sample_interior,
)

# Types
from .types import (
    ALL_ROUTES,
    Classification,
    ClassificationWitness,
    DualMatrix,
    HurwitzMatrix,
    JacobianMatrix,
    MomentVector,
    OutputFormat,
    RootSet,
    Route,
    RunReport,
    Surface,
    SymmetrizedPowerTable,
    ToeplitzMatrix,
    UnivalenceReport,
    Verdict,
)

# Errors
from .errors import (
    InputError,
    MomentJacError,
    NumericalError,
    SamplerExhaustedError,
    VerificationError,
)

__all__ = [
    # Version
    "__version__",
    # Exact algebra
    "LaurentSeries",
    "MomentPolynomial",
    "RatPoly",
    "bareiss_det",
    "derivative",
    "laurent_coeff",
    "mobius_transform",
    "reciprocal",
    "substitute_inverse",
    # Moments
    "cauchy_series",
    "moment_map",
    "moment_polynomial",
    "moments_residue",
    "moments_richardson",
    # Structured matrices
    "build_dual",
    "build_h_table",
    "build_toeplitz",
    "dual_det_exact",
    "dual_det_roots",
    "h_det",
    "symmetric_vandermonde_det",
    # Hurwitz determinants and resultants
    "hurwitz_det",
    "hurwitz_det_roots",
    "hurwitz_matrix",
    "mobius_hurwitz_det",
    "self_reciprocal_resultant",
    "sylvester_resultant",
    "v2_explicit",
    "v3_explicit",
    "v4_explicit",
    "v_form_eval",
    "v_form_exact",
    "w_form",
    # Jacobian
    "evaluate_routes",
    "fd_max_deviation",
    "jacobian_det_direct",
    "jacobian_det_roots",
    "jacobian_det_toeplitz",
    "jacobian_det_ullemar",
    "jacobian_det_vform",
    "jacobian_fd_oracle",
    "jacobian_matrix",
    "jacobian_sq_resultant",
    "partial_moment",
    "partial_row_lemma",
    # Univalence
    "classify",
    "dilate",
    "find_roots",
    "is_locally_univalent",
    "resultant_sign_witness",
    "sample_interior",
    # Types
    "ALL_ROUTES",
    "Classification",
    "ClassificationWitness",
    "DualMatrix",
    "HurwitzMatrix",
    "JacobianMatrix",
    "MomentVector",
    "OutputFormat",
    "RootSet",
    "Route",
    "RunReport",
    "Surface",
    "SymmetrizedPowerTable",
    "ToeplitzMatrix",
    "UnivalenceReport",
    "Verdict",
    # Errors
    "MomentJacError",
    "InputError",
    "NumericalError",
    "SamplerExhaustedError",
    "VerificationError",
]
