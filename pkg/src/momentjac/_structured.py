"""Toeplitz matrices, their dual matrices and the symmetrized power table.

For ``x, y`` of length ``L`` the dual matrix ``B(y)`` is fixed by
``T(x) y^T = B(y) x^T``. Reading off the coefficient of ``x_j`` in
``(T(x) y)_i = Σ_k x_{|i-k|} y_k`` gives ``k = i + j`` and ``k = i - j``,
the latter only for ``j >= 1`` so that ``j = 0`` is counted once::

    B[i][j] = [i + j <= L - 1] y[i+j] + [j >= 1 and i >= j] y[i-j]
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction

import numpy as np

from ._constants import FLOAT_TOLERANCE, VANDERMONDE_TOLERANCE
from ._linalg import bareiss_det
from ._polycore import (
    LaurentSeries,
    MomentPolynomial,
    Rational,
    RatPoly,
    check_moment_polynomial,
    substitute_inverse,
)
from .errors import InputError, VerificationError
from .types import DualMatrix, RootSet, SymmetrizedPowerTable, ToeplitzMatrix

logger = logging.getLogger("momentjac")


def _as_vector(values: Sequence[Rational], name: str) -> tuple[Fraction, ...]:
    if len(values) == 0:
        raise InputError(f"{name} must be a nonempty vector", parameter=name)
    return tuple(Fraction(v) for v in values)


def build_toeplitz(x: Sequence[Rational]) -> ToeplitzMatrix:
    """Symmetric Toeplitz matrix ``T[i][k] = x[|i-k|]``."""
    gen = _as_vector(x, "x")
    size = len(gen)
    entries = tuple(tuple(gen[abs(i - k)] for k in range(size)) for i in range(size))
    return ToeplitzMatrix(generator=gen, entries=entries)


def build_dual(y: Sequence[Rational]) -> DualMatrix:
    """Dual matrix ``B(y)`` of the Toeplitz family (see module docstring)."""
    gen = _as_vector(y, "y")
    size = len(gen)
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            value = gen[i + j] if i + j <= size - 1 else Fraction(0)
            if j >= 1 and i >= j:
                value += gen[i - j]
            row.append(value)
        rows.append(tuple(row))
    return DualMatrix(generator=gen, entries=tuple(rows))


def dual_det_exact(B: DualMatrix) -> Fraction:
    """Exact ``det B(y)`` by fraction-free elimination."""
    return bareiss_det(B.entries)


def dual_det_roots(
    y: Sequence[Rational],
    roots: RootSet,
    *,
    tol: float = FLOAT_TOLERANCE,
) -> complex:
    """``det B(y) = y_m^{m+1} Π_{i>=j} (ζ_i ζ_j - 1)`` over the roots of ``B_y``.

    ``B_y(z) = y_0 + ... + y_m z^m`` must have ``y_m != 0`` and ``roots``
    must hold all ``m`` of its zeros. This is a floating oracle; exact
    callers use :func:`dual_det_exact`.
    """
    gen = _as_vector(y, "y")
    m = len(gen) - 1
    if gen[m] == 0:
        raise InputError("Leading entry y_m must be nonzero", parameter="y")
    if len(roots) != m:
        raise InputError(f"Expected {m} roots of B_y, got {len(roots)}", parameter="roots")
    zs = roots.roots
    product = complex(1.0)
    for i in range(m):
        for j in range(i + 1):
            product *= zs[i] * zs[j] - 1
    value = complex(float(gen[m]) ** (m + 1)) * product
    if abs(value.imag) > tol * max(1.0, abs(value)):
        logger.warning("dual_det_roots: imaginary residue %.3e", value.imag)
    return value


def build_h_table(P: MomentPolynomial) -> SymmetrizedPowerTable:
    """Lower-triangular table ``h[m][k] = [z^m] (P^k(z) + P^k(1/z))``.

    Raises
    ------
    InputError:
        If ``P`` has a nonzero constant term.
    """
    n = check_moment_polynomial(P)
    columns = []
    for power in P.powers(n, max_degree=n):
        series = symmetrized_power(power)
        columns.append([series.coefficient(m) for m in range(n)])
    h = tuple(tuple(columns[k][m] for k in range(n)) for m in range(n))
    return SymmetrizedPowerTable(h=h)


def symmetrized_power(power: RatPoly) -> LaurentSeries:
    """``Q(z) + Q(1/z)`` as a Laurent series, for ``Q = P^k``."""
    return LaurentSeries.from_poly(power) + substitute_inverse(power)


def h_det(T: SymmetrizedPowerTable) -> Fraction:
    """Determinant of the h-table.

    The table is lower triangular with diagonal ``(2, a_1, ..., a_1^{n-1})``,
    so the value is ``2 a_1^{n(n-1)/2}``.
    """
    return bareiss_det(T.h)


def symmetric_vandermonde_det(
    points: Sequence[complex],
    *,
    tol: float = VANDERMONDE_TOLERANCE,
) -> complex:
    """Determinant of ``W[i][j] = α_j^i + α_j^{-i}``, ``0 <= i, j <= m``.

    The matrix determinant is compared against the closed form
    ``2 / (α_0...α_m)^m · Π_{i<j}(α_j - α_i) · Π_{i<j}(α_i α_j - 1)``.

    Raises
    ------
    InputError:
        If a point is zero.
    VerificationError:
        If the two values differ by more than ``tol`` relative.
    """
    alphas = [complex(a) for a in points]
    if not alphas:
        raise InputError("points must be nonempty", parameter="points")
    if any(a == 0 for a in alphas):
        raise InputError("symmetric Vandermonde points must be nonzero", parameter="points")
    size = len(alphas)
    m = size - 1
    matrix = np.array(
        [[a**i + a ** (-i) for a in alphas] for i in range(size)], dtype=np.complex128
    )
    direct = complex(np.linalg.det(matrix))

    scale = complex(1.0)
    for a in alphas:
        scale *= a
    closed = 2 / scale**m
    for i in range(size):
        for j in range(i + 1, size):
            closed *= (alphas[j] - alphas[i]) * (alphas[i] * alphas[j] - 1)
    if abs(direct - closed) > tol * max(1.0, abs(closed)):
        raise VerificationError(
            "Symmetric Vandermonde determinant does not match its closed form",
            route="closed-form",
            expected=direct,
            actual=closed,
        )
    return direct
