"""Hurwitz determinants, Sylvester resultants and the W/V root-product forms.

Conventions: empty minors and empty products are 1. The Sylvester matrix is
the standard one (rows of ``A`` then rows of ``B``, leading coefficients
first), which gives ``Res(A, B) = A_p^q B_q^p Π (α_i - β_j)``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from typing import Optional

from ._constants import FLOAT_TOLERANCE, V_FORM_TOLERANCE
from ._linalg import bareiss_det, leading_minor
from ._polycore import Rational, RatPoly, mobius_transform, reciprocal
from ._roots import find_roots
from .errors import InputError, VerificationError
from .types import HurwitzMatrix, RootSet

logger = logging.getLogger("momentjac")


def _relative_gap(a: complex, b: complex) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def _degree(R: RatPoly, name: str) -> int:
    degree = R.degree
    if degree is None:
        raise InputError(f"{name} must be a nonzero polynomial", parameter=name)
    return degree


def _resolve_roots(R: RatPoly, roots: Optional[RootSet], name: str) -> tuple[complex, ...]:
    m = _degree(R, name)
    if roots is None:
        roots = find_roots(R) if m >= 1 else RootSet(roots=())
    if len(roots) != m:
        raise InputError(
            f"Expected {m} roots of {name}, got {len(roots)}", parameter="roots"
        )
    return roots.roots


def _pair_product(zs: Sequence[complex], *, diagonal: bool) -> complex:
    """``Π (z_i z_j - 1)`` over ``i < j`` (or ``i <= j`` with ``diagonal``)."""
    product = complex(1.0)
    for i in range(len(zs)):
        for j in range(i if diagonal else i + 1, len(zs)):
            product *= zs[i] * zs[j] - 1
    return product


# ── Hurwitz ─────────────────────────────────────────────────────────


def hurwitz_matrix(R: RatPoly) -> HurwitzMatrix:
    """The ``m x m`` Hurwitz matrix ``G[i][j] = r_{m+i-2j}`` (1-based, ``r_k = 0`` off range).

    Raises
    ------
    InputError:
        If ``R`` is constant.
    """
    m = _degree(R, "R")
    if m < 1:
        raise InputError("Hurwitz matrices need degree >= 1", parameter="R")
    entries = tuple(
        tuple(R.coefficient(m + i - 2 * j) for j in range(1, m + 1)) for i in range(1, m + 1)
    )
    return HurwitzMatrix(source=R, entries=entries)


def hurwitz_det(R: RatPoly) -> Fraction:
    """Hurwitz determinant ``Δ(R)``: leading principal minor of order ``m-1`` of ``G(R)``."""
    G = hurwitz_matrix(R)
    m = len(G.entries)
    return leading_minor(G.entries, m - 1)


def hurwitz_det_roots(R: RatPoly, roots: Optional[RootSet] = None) -> complex:
    """``Δ(R) = (-1)^{(m²-m)/2} r_m^{m-1} Π_{i<j} (z_i + z_j)`` over the roots of ``R``."""
    zs = _resolve_roots(R, roots, "R")
    m = len(zs)
    product = complex(1.0)
    for i in range(m):
        for j in range(i + 1, m):
            product *= zs[i] + zs[j]
    sign = -1 if ((m * m - m) // 2) % 2 else 1
    return sign * float(R.leading) ** (m - 1) * product


def mobius_hurwitz_det(
    R: RatPoly,
    roots: Optional[RootSet] = None,
    *,
    tol: float = FLOAT_TOLERANCE,
) -> complex:
    """``Δ`` of the Möbius image of ``R``, computed two ways.

    The minor of the expanded image is compared with
    ``2^{(m²-m)/2} r_m^{m-1} Π_{i<j} (z_i z_j - 1)``.

    Raises
    ------
    InputError:
        If ``R(1) = 0`` (the image loses degree).
    VerificationError:
        If the two values differ by more than ``tol`` relative.
    """
    zs = _resolve_roots(R, roots, "R")
    if R(1) == 0:
        raise InputError("R(1) = 0: the Möbius image is degenerate", parameter="R")
    m = len(zs)
    minor = hurwitz_det(mobius_transform(R))
    by_roots = 2 ** ((m * m - m) // 2) * float(R.leading) ** (m - 1) * _pair_product(
        zs, diagonal=False
    )
    if _relative_gap(float(minor), by_roots) > tol:
        logger.error("Möbius-Hurwitz routes disagree: %s vs %s", minor, by_roots)
        raise VerificationError(
            "Hurwitz minor of the Möbius image disagrees with the root product",
            route="mobius-roots",
            expected=minor,
            actual=by_roots,
        )
    return complex(float(minor))


# ── Resultants ──────────────────────────────────────────────────────


def sylvester_matrix(A: RatPoly, B: RatPoly) -> tuple[tuple[Fraction, ...], ...]:
    p = _degree(A, "A")
    q = _degree(B, "B")
    size = p + q
    rows = []
    a_desc = list(reversed(A.coeffs))
    b_desc = list(reversed(B.coeffs))
    for shift in range(q):
        row = [Fraction(0)] * size
        row[shift : shift + p + 1] = a_desc
        rows.append(tuple(row))
    for shift in range(p):
        row = [Fraction(0)] * size
        row[shift : shift + q + 1] = b_desc
        rows.append(tuple(row))
    return tuple(rows)


def sylvester_resultant(A: RatPoly, B: RatPoly) -> Fraction:
    """Exact ``Res(A, B)`` as the determinant of the Sylvester matrix.

    Raises
    ------
    InputError:
        If either polynomial is zero.
    """
    return bareiss_det(sylvester_matrix(A, B))


def self_reciprocal_resultant(
    A: RatPoly,
    roots: Optional[RootSet] = None,
    *,
    tol: float = FLOAT_TOLERANCE,
) -> Fraction:
    """``Res(A, A*)`` with ``A* = z^n A(1/z)``, ``n = deg A``.

    A nonzero constant gives the empty determinant 1. When ``roots`` are
    supplied the exact value is checked against
    ``(-1)^n A(-1) A(1) A_n^{2n-2} Π_{i>j} (α_i α_j - 1)^2``.
    """
    n = _degree(A, "A")
    value = sylvester_resultant(A, reciprocal(A, n))
    if roots is not None:
        zs = _resolve_roots(A, roots, "A")
        expected = (
            (-1) ** n
            * float(A(-1))
            * float(A(1))
            * float(A.leading) ** (2 * n - 2)
            * _pair_product(zs, diagonal=False) ** 2
        )
        if _relative_gap(float(value), expected) > tol:
            raise VerificationError(
                "Res(A, A*) disagrees with its root-product form",
                route="resultant-roots",
                expected=value,
                actual=expected,
            )
    return value


# ── W / V forms ─────────────────────────────────────────────────────


def w_form(A: RatPoly, roots: Optional[RootSet] = None) -> complex:
    """``W_n(A) = A_n^{n+1} Π_{i<=j} (α_i α_j - 1)``; ``W_n^2 = (-1)^n Res(A, A*) A(-1) A(1)``."""
    zs = _resolve_roots(A, roots, "A")
    n = len(zs)
    return float(A.leading) ** (n + 1) * _pair_product(zs, diagonal=True)


def v_form_eval(
    A: RatPoly,
    roots: Optional[RootSet] = None,
    *,
    tol: float = V_FORM_TOLERANCE,
) -> complex:
    """``V_n(A) = A_n^{n-1} Π_{i<j} (α_i α_j - 1)``, so that ``W_n = A(-1) A(1) V_n``.

    For ``2 <= n <= 4`` the product is checked against the explicit form.

    Raises
    ------
    VerificationError:
        If the product and the explicit form differ by more than ``tol`` relative.
    """
    zs = _resolve_roots(A, roots, "A")
    n = len(zs)
    value = float(A.leading) ** (n - 1) * _pair_product(zs, diagonal=False)
    if 2 <= n <= 4:
        explicit = v_form_exact(A)
        if _relative_gap(value, float(explicit)) > tol:
            raise VerificationError(
                "Root-product V form disagrees with its explicit expansion",
                route="v-explicit",
                expected=explicit,
                actual=value,
            )
    return value


def v2_explicit(A0: Rational, A1: Rational, A2: Rational) -> Fraction:
    """``V_2 = A_0 - A_2`` (``α_1 α_2 = A_0 / A_2``)."""
    return Fraction(A0) - Fraction(A2)


def v3_explicit(A0: Rational, A1: Rational, A2: Rational, A3: Rational) -> Fraction:
    a0, a1, a2, a3 = (Fraction(v) for v in (A0, A1, A2, A3))
    return a0 * a0 - a0 * a2 + a1 * a3 - a3 * a3


def v4_explicit(
    A0: Rational, A1: Rational, A2: Rational, A3: Rational, A4: Rational
) -> Fraction:
    a0, a1, a2, a3, a4 = (Fraction(v) for v in (A0, A1, A2, A3, A4))
    return a4 * (
        -a1 * a1 + a3 * a1 + a4 * a4 - a4 * a2 - a0 * a4 + 2 * a0 * a2 - a0 * a0
    ) + a0 * v3_explicit(a0, a1, a2, a3)


def v_form_exact(A: RatPoly, degree: Optional[int] = None) -> Fraction:
    """Exact ``V_d(A_0, ..., A_d)`` for formal degree ``d`` in 1..4.

    ``degree`` pads ``A`` with zero top coefficients, which is how the
    recursion ``V_n(A_0..A_k, 0..0) = A_0^{n-k} V_k(A_0..A_k)`` is read.
    """
    d = _degree(A, "A") if degree is None else degree
    if A.degree is not None and d < A.degree:
        raise InputError(f"Formal degree {d} below the degree of A", parameter="degree")
    cs = [A.coefficient(j) for j in range(d + 1)]
    if d == 1:
        return Fraction(1)
    if d == 2:
        return v2_explicit(*cs)
    if d == 3:
        return v3_explicit(*cs)
    if d == 4:
        return v4_explicit(*cs)
    raise InputError(f"No explicit V form for degree {d}", parameter="degree")
