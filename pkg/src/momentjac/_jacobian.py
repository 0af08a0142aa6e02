"""The Jacobian ``dμ(P)`` of the moment mapping and its determinant routes.

Rows are indexed by the coefficient ``a_ν`` (``ν = 1..n``) and columns by
the moment ``M_k`` (``k = 0..n-1``). The exact routes must agree as
rationals; the root route is a floating oracle.

``b`` is the zero-based coefficient vector of ``P'``: ``b_j = (j+1) a_{j+1}``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Optional, Union

import numpy as np
import numpy.typing as npt

from ._constants import FD_STEP, FLOAT_TOLERANCE, ROOT_FORM_TOLERANCE
from ._hurwitz import hurwitz_det, self_reciprocal_resultant, v_form_exact
from ._linalg import bareiss_det
from ._moments import moment_map
from ._polycore import (
    LaurentSeries,
    MomentPolynomial,
    RatPoly,
    check_moment_polynomial,
    derivative,
    laurent_coeff,
    mobius_transform,
    substitute_inverse,
)
from ._roots import find_roots
from ._structured import build_dual, build_h_table, dual_det_exact, h_det, symmetrized_power
from .errors import InputError, VerificationError
from .types import ALL_ROUTES, JacobianMatrix, RootSet, Route

logger = logging.getLogger("momentjac")

RouteValue = Union[Fraction, complex]


def _check_indices(n: int, k: int, nu: Optional[int] = None) -> None:
    if not 0 <= k <= n - 1:
        raise InputError(f"Moment index k={k} outside 0..{n - 1}", parameter="k")
    if nu is not None and not 1 <= nu <= n:
        raise InputError(f"Coefficient index ν={nu} outside 1..{n}", parameter="nu")


def _h_power(n: int, a1: Fraction) -> Fraction:
    """``a_1^{n(n-1)/2}``, the h-table factor."""
    return a1 ** (n * (n - 1) // 2)


# ── Partial derivatives ─────────────────────────────────────────────


def partial_moment(P: MomentPolynomial, k: int, nu: int) -> Fraction:
    """``∂M_k/∂a_ν`` after integrating by parts.

    ``λ_0(P^k(1/z) P'(z) z^{1-ν}) + ν/(k+1) λ_0(P^{k+1}(1/z) z^ν)``.
    """
    n = check_moment_polynomial(P)
    _check_indices(n, k, nu)
    return _partial_by_parts(derivative(P), _inverse_powers(P, n), k, nu)


def partial_row_lemma(P: MomentPolynomial, k: int) -> tuple[Fraction, ...]:
    """Coefficients of ``z^0..z^{n-1}`` in ``P'(z) (P^k(z) + P^k(1/z))``.

    Entry ``ν-1`` is ``∂M_k/∂a_ν``.
    """
    n = check_moment_polynomial(P)
    _check_indices(n, k)
    power = P.powers(k + 1, max_degree=n)[k]
    return _row_lemma(LaurentSeries.from_poly(derivative(P)), power, n)


def _inverse_powers(P: RatPoly, n: int) -> list[LaurentSeries]:
    """``P^j(1/z)`` for ``j = 0..n``, each cut below ``z^{-n}``.

    Both derivative formulas read only the coefficients of ``z^0..z^n`` in
    ``P^j``.
    """
    return [substitute_inverse(power) for power in P.powers(n + 1, max_degree=n)]


def _partial_by_parts(
    dP: RatPoly, inverse: Sequence[LaurentSeries], k: int, nu: int
) -> Fraction:
    first = laurent_coeff(inverse[k] * LaurentSeries.from_poly(dP, shift=1 - nu), 0)
    second = laurent_coeff(inverse[k + 1].shift(nu), 0)
    return first + Fraction(nu, k + 1) * second


def _row_lemma(dP: LaurentSeries, power: RatPoly, n: int) -> tuple[Fraction, ...]:
    product = dP * symmetrized_power(power)
    return tuple(product.coefficient(m) for m in range(n))


def jacobian_matrix(P: MomentPolynomial) -> JacobianMatrix:
    """``dμ(P)`` from the row lemma, checked entrywise against :func:`partial_moment`.

    Raises
    ------
    InputError:
        If ``P(0) != 0`` or ``a_1 <= 0``.
    VerificationError:
        If the two derivative formulas disagree anywhere.
    """
    n = check_moment_polynomial(P, require_positive_a1=True)
    dP = derivative(P)
    inverse = _inverse_powers(P, n)
    powers = P.powers(n, max_degree=n)
    dP_series = LaurentSeries.from_poly(dP)
    columns = [_row_lemma(dP_series, powers[k], n) for k in range(n)]
    entries = tuple(tuple(columns[k][nu - 1] for k in range(n)) for nu in range(1, n + 1))
    for nu in range(1, n + 1):
        for k in range(n):
            by_parts = _partial_by_parts(dP, inverse, k, nu)
            if by_parts != entries[nu - 1][k]:
                logger.error("∂M_%d/∂a_%d: %s vs %s", k, nu, entries[nu - 1][k], by_parts)
                raise VerificationError(
                    f"Row lemma and integration by parts disagree at (ν={nu}, k={k})",
                    route="partial-moment",
                    expected=entries[nu - 1][k],
                    actual=by_parts,
                )
    return JacobianMatrix(entries=entries)


# ── Determinant routes ──────────────────────────────────────────────


def jacobian_det_direct(P: MomentPolynomial) -> Fraction:
    """``J(P) = det dμ(P)`` by fraction-free elimination."""
    return bareiss_det(jacobian_matrix(P).entries)


def jacobian_det_toeplitz(P: MomentPolynomial) -> Fraction:
    """``J(P) = det B(b) · det H = det B(b) · 2 a_1^{n(n-1)/2}``."""
    n = check_moment_polynomial(P, require_positive_a1=True)
    b = [derivative(P).coefficient(j) for j in range(n)]
    value = dual_det_exact(build_dual(b)) * h_det(build_h_table(P))
    logger.debug("toeplitz route, n=%d: %s", n, value)
    return value


def jacobian_det_roots(
    P: MomentPolynomial,
    roots: Optional[RootSet] = None,
    *,
    tol: float = ROOT_FORM_TOLERANCE,
) -> complex:
    """``J(P)`` from the zeros ``ζ_i`` of ``P'``.

    Returns ``2 a_1^{n(n-1)/2} (n a_n)^n Π_{i<=j} (ζ_i ζ_j - 1)`` after
    checking it against ``2 a_1^{n(n-1)/2} (n a_n)^{n-2} P'(1) P'(-1)
    Π_{i<j} (ζ_i ζ_j - 1)``.

    Raises
    ------
    InputError:
        If ``roots`` does not hold exactly ``n-1`` values.
    VerificationError:
        If the two forms differ by more than ``tol`` relative, or the value
        carries an imaginary part above ``tol``.
    """
    n = check_moment_polynomial(P, require_positive_a1=True)
    dP = derivative(P)
    if roots is None:
        roots = find_roots(dP) if n > 1 else RootSet(roots=())
    if len(roots) != n - 1:
        raise InputError(f"Expected {n - 1} roots of P', got {len(roots)}", parameter="roots")

    zs = roots.roots
    off_diagonal = complex(1.0)
    diagonal = complex(1.0)
    for i in range(n - 1):
        diagonal *= zs[i] * zs[i] - 1
        for j in range(i + 1, n - 1):
            off_diagonal *= zs[i] * zs[j] - 1

    scale = 2 * float(_h_power(n, P.coefficient(1)))
    lead = float(n * P.leading)
    full = scale * lead**n * diagonal * off_diagonal
    factored = scale * lead ** (n - 2) * float(dP(1) * dP(-1)) * off_diagonal

    size = max(1.0, abs(full), abs(factored))
    if abs(full - factored) > tol * size:
        logger.error("Root forms disagree: %s vs %s", full, factored)
        raise VerificationError(
            "The two root-product forms of J disagree",
            route="roots",
            expected=full,
            actual=factored,
        )
    if abs(full.imag) > tol * size:
        raise VerificationError(
            "Root-product J has a nonzero imaginary part",
            route="roots",
            expected=full.real,
            actual=full,
        )
    return full


def jacobian_det_ullemar(P: MomentPolynomial) -> Fraction:
    """``J(P) = 2^{-n(n-3)/2} a_1^{n(n-1)/2} P'(1) P'(-1) Δ(~P')``.

    ``Δ`` is the Hurwitz determinant of the Möbius image of ``P'``. The
    value is 0 when ``P'(1) = 0`` (the image would lose degree). For
    ``n = 1`` the constant derivative ``c`` continues as ``Δ(c) = 1/c``.
    """
    n = check_moment_polynomial(P, require_positive_a1=True)
    dP = derivative(P)
    p1 = dP(1)
    if p1 == 0:
        return Fraction(0)
    if n == 1:
        delta = 1 / dP.leading
    else:
        delta = hurwitz_det(mobius_transform(dP))
    scale = Fraction(2) ** (-(n * (n - 3)) // 2) * _h_power(n, P.coefficient(1))
    return scale * p1 * dP(-1) * delta


def jacobian_sq_resultant(P: MomentPolynomial) -> Fraction:
    """``J(P)^2 = 4 (-1)^{n-1} a_1^{n(n-1)} Res(P', P'*) P'(-1) P'(1)``."""
    n = check_moment_polynomial(P, require_positive_a1=True)
    dP = derivative(P)
    resultant = self_reciprocal_resultant(dP)
    sign = -1 if (n - 1) % 2 else 1
    return 4 * sign * _h_power(n, P.coefficient(1)) ** 2 * resultant * dP(-1) * dP(1)


def jacobian_det_vform(P: MomentPolynomial) -> Fraction:
    """``J(P) = 2 a_1^{n(n-1)/2} P'(1) P'(-1) V_{n-1}(P')`` for ``2 <= n <= 5``."""
    n = check_moment_polynomial(P, require_positive_a1=True)
    if not 2 <= n <= 5:
        raise InputError(f"The V-form route covers 2 <= n <= 5, got n={n}", parameter="P")
    dP = derivative(P)
    return 2 * _h_power(n, P.coefficient(1)) * dP(1) * dP(-1) * v_form_exact(dP)


# ── Finite differences ──────────────────────────────────────────────


def _padded_moments(P: RatPoly, n: int) -> list[Fraction]:
    values = list(moment_map(P).values)
    return values + [Fraction(0)] * (n - len(values))


def jacobian_fd_oracle(P: MomentPolynomial, h: float = FD_STEP) -> npt.NDArray[np.float64]:
    """Central differences of :func:`moment_map`, same orientation as :func:`jacobian_matrix`.

    Perturbations use the exact rational ``Fraction(str(h))``.
    """
    if not h > 0:
        raise InputError(f"Step must be positive, got {h}", parameter="h")
    n = check_moment_polynomial(P, require_positive_a1=True)
    step = Fraction(str(h))
    out = np.zeros((n, n), dtype=np.float64)
    for nu in range(1, n + 1):
        bump = RatPoly.monomial(nu, step)
        upper = _padded_moments(P + bump, n)
        lower = _padded_moments(P - bump, n)
        for k in range(n):
            out[nu - 1, k] = float((upper[k] - lower[k]) / (2 * step))
    return out


def fd_max_deviation(P: MomentPolynomial, h: float = FD_STEP) -> float:
    """Largest ``|fd - exact| / max(1, |exact|)`` over the Jacobian entries."""
    exact = np.array(
        [[float(v) for v in row] for row in jacobian_matrix(P).entries], dtype=np.float64
    )
    approx = jacobian_fd_oracle(P, h)
    return float(np.max(np.abs(approx - exact) / np.maximum(1.0, np.abs(exact))))


# ── Cross-check engine ──────────────────────────────────────────────


def evaluate_routes(
    P: MomentPolynomial,
    routes: Iterable[Route] = ALL_ROUTES,
    *,
    tol: float = FLOAT_TOLERANCE,
) -> tuple[dict[Route, RouteValue], dict[str, bool]]:
    """Evaluate the requested routes and compare each with the direct determinant.

    Exact routes must match exactly, ``resultant-squared`` must equal
    ``direct^2`` and ``roots`` must be within ``tol`` relative. The roots
    route also records ``root-forms``: whether its two root-product forms
    agreed. When they do not, the full-product value is still reported.
    """
    requested = list(dict.fromkeys(routes))
    direct = jacobian_det_direct(P)
    values: dict[Route, RouteValue] = {}
    agreement: dict[str, bool] = {}
    for route in requested:
        if route == "direct":
            values[route] = direct
        elif route == "toeplitz":
            values[route] = jacobian_det_toeplitz(P)
            agreement[route] = values[route] == direct
        elif route == "ullemar":
            values[route] = jacobian_det_ullemar(P)
            agreement[route] = values[route] == direct
        elif route == "vform":
            values[route] = jacobian_det_vform(P)
            agreement[route] = values[route] == direct
        elif route == "resultant-squared":
            values[route] = jacobian_sq_resultant(P)
            agreement[route] = values[route] == direct * direct
        elif route == "roots":
            forms_agree = True
            try:
                value = jacobian_det_roots(P)
            except VerificationError as exc:
                logger.warning("Root-product self-check failed for %s: %r", P, exc)
                value = complex(exc.expected)
                forms_agree = False
            values[route] = value
            gap = abs(value - float(direct)) / max(1.0, abs(float(direct)))
            agreement[route] = gap <= tol
            agreement["root-forms"] = forms_agree
        else:
            raise InputError(f"Unknown route {route!r}", parameter="routes")
    logger.debug("routes for %s: %s", P, agreement)
    return values, agreement
