"""Complex moments of a real polynomial image of the unit disk.

Two exact routes are provided and cross-checked by :func:`moment_map`:

- Richardson's index sum over all tuples ``(i_1, ..., i_{k+1})``.
- The residue form ``M_k = 1/(k+1) res_{ζ=0} P^{k+1}(ζ) P'(1/ζ) ζ^{-2}``,
  i.e. ``M_k = 1/(k+1) Σ_j j a_j [ζ^j] P^{k+1}(ζ)``.

The residue integrand carries ``ζ^{-2}``; with ``ζ^{-1}`` the form does not
reproduce ``M_0 = Σ j a_j^2``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction

from ._polycore import (
    LaurentSeries,
    MomentPolynomial,
    Rational,
    RatPoly,
    check_moment_polynomial,
)
from .errors import InputError, VerificationError
from .types import MomentVector

logger = logging.getLogger("momentjac")


def richardson_moment(P: MomentPolynomial, k: int) -> Fraction:
    """``M_k`` by Richardson's sum ``Σ i_1 a_{i_1} ... a_{i_{k+1}} a_{i_1+...+i_{k+1}}``.

    The first index is enumerated explicitly; the remaining ``k`` indices
    range over all compositions, whose products are collected by the
    coefficients of ``P^k``. Terms with index sum above ``n`` vanish.
    """
    if k < 0:
        raise InputError(f"Moment index must be nonnegative, got {k}", parameter="k")
    n = check_moment_polynomial(P)
    return _richardson_sum(P, n, k, P.powers(k + 1, max_degree=n)[k])


def _richardson_sum(P: RatPoly, n: int, k: int, rest: RatPoly) -> Fraction:
    # rest = P^k, needed only up to z^n
    total = Fraction(0)
    for s in range(k + 1, n + 1):
        a_s = P.coefficient(s)
        if a_s == 0:
            continue
        inner = Fraction(0)
        for i1 in range(1, s - k + 1):
            inner += i1 * P.coefficient(i1) * rest.coefficient(s - i1)
        total += inner * a_s
    return total


def residue_moment(P: MomentPolynomial, k: int) -> Fraction:
    """``M_k`` by the residue form, valid for every ``k >= 0`` (zero for ``k >= n``)."""
    if k < 0:
        raise InputError(f"Moment index must be nonnegative, got {k}", parameter="k")
    n = check_moment_polynomial(P)
    return _residue_sum(P, k, P.powers(k + 2, max_degree=n)[k + 1])


def _residue_sum(P: RatPoly, k: int, power: RatPoly) -> Fraction:
    # power = P^(k+1); the sum reads coefficients up to z^n only
    total = Fraction(0)
    for j, a_j in enumerate(P.coeffs):
        if j and a_j:
            total += j * a_j * power.coefficient(j)
    return total / (k + 1)


def moments_richardson(P: MomentPolynomial) -> MomentVector:
    """``μ(P)`` by Richardson's index sum.

    Raises
    ------
    InputError:
        If ``P`` has a nonzero constant term.
    """
    n = check_moment_polynomial(P)
    powers = P.powers(n, max_degree=n)
    return MomentVector(tuple(_richardson_sum(P, n, k, powers[k]) for k in range(n)))


def moments_residue(P: MomentPolynomial) -> MomentVector:
    """``μ(P)`` by the residue representation."""
    n = check_moment_polynomial(P)
    powers = P.powers(n + 1, max_degree=n)
    return MomentVector(tuple(_residue_sum(P, k, powers[k + 1]) for k in range(n)))


def moment_map(P: MomentPolynomial) -> MomentVector:
    """The moment mapping ``μ(P) = (M_0, ..., M_{n-1})``.

    Computes both exact routes and returns the Richardson vector after
    asserting that they agree.

    Raises
    ------
    InputError:
        If ``P(0) != 0`` or ``a_1 <= 0``.
    VerificationError:
        If the two routes disagree (an implementation fault).
    """
    n = check_moment_polynomial(P, require_positive_a1=True)
    by_sum = moments_richardson(P)
    by_residue = moments_residue(P)
    if by_sum != by_residue:
        logger.error("Moment routes disagree for %s: %s vs %s", P, by_sum, by_residue)
        raise VerificationError(
            "Richardson and residue moments disagree",
            route="residue",
            expected=by_sum.values,
            actual=by_residue.values,
        )
    logger.debug("μ(P) for degree %d: %s", n, [str(v) for v in by_sum.values])
    return by_sum


def cauchy_series(P: MomentPolynomial, terms: int) -> LaurentSeries:
    """Germ at infinity of the Cauchy transform: ``Σ_k M_k z^{-(k+1)}``.

    Only ``min(terms, n)`` terms can be nonzero since ``M_k = 0`` for ``k >= n``.
    """
    if terms < 1:
        raise InputError(f"terms must be >= 1, got {terms}", parameter="terms")
    n = check_moment_polynomial(P)
    moments = moments_residue(P)
    return LaurentSeries({-(k + 1): moments[k] for k in range(min(terms, n))})


def moment_polynomial(coeffs: Sequence[Rational]) -> MomentPolynomial:
    """Build ``a_1 z + ... + a_n z^n`` from ``[a_1, ..., a_n]``."""
    return RatPoly([0, *coeffs])
