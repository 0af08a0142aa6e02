"""Membership in the locally univalent class and boundary classification.

``P`` is locally univalent on the closed disk when ``P'`` has no zeros with
``|ζ| <= 1``. Float margins locate the roots; every verdict is backed by the
exact values of ``P'(1)``, ``P'(-1)`` and ``Res(P', P'*)``.
"""

from __future__ import annotations

import logging
from fractions import Fraction

import numpy as np

from ._constants import (
    CIRCLE_TOLERANCE,
    DEFAULT_SAMPLER_TRIALS,
    DILATION_RANGE,
    DISCRIMINANT_FLOOR,
    MARGIN_ESCALATION,
    SAMPLER_COEFF_BOUND,
    SAMPLER_MAX_DENOMINATOR,
)
from ._hurwitz import self_reciprocal_resultant, v_form_exact
from ._polycore import (
    MomentPolynomial,
    Rational,
    RatPoly,
    check_moment_polynomial,
    derivative,
)
from ._roots import discriminant_float, find_roots, is_on_circle
from .errors import InputError, NumericalError, SamplerExhaustedError
from .types import Classification, ClassificationWitness, RootSet, Surface, UnivalenceReport

logger = logging.getLogger("momentjac")


def _has_circle_pair(roots: RootSet, tol: float) -> bool:
    return any(abs(r.imag) > tol and is_on_circle(r, tol) for r in roots)


def is_locally_univalent(
    P: MomentPolynomial, *, tol: float = MARGIN_ESCALATION
) -> UnivalenceReport:
    """Whether every zero of ``P'`` satisfies ``|ζ| > 1``.

    When the float margin is at most ``tol`` the exact resultant decides:
    ``Res(P', P'*) = 0`` means a zero on the circle (or a reciprocal pair
    straddling it), so ``P`` is not locally univalent.

    Raises
    ------
    InputError:
        If ``P(0) != 0`` or ``a_1 = 0``.
    """
    n = check_moment_polynomial(P)
    if P.coefficient(1) == 0:
        raise InputError("Need a_1 != 0", parameter="a_1")
    if n == 1:
        return UnivalenceReport(locally_univalent=True, margin=float("inf"))

    dP = derivative(P)
    roots = find_roots(dP)
    outside = min(abs(r) for r in roots) > 1.0
    if roots.margin > tol:
        return UnivalenceReport(
            locally_univalent=outside, margin=roots.margin, trusted=roots.trusted
        )

    logger.info("Margin %.3e at or below %.1e, using the exact test", roots.margin, tol)
    if self_reciprocal_resultant(dP) == 0:
        return UnivalenceReport(locally_univalent=False, margin=roots.margin, escalated=True)
    return UnivalenceReport(
        locally_univalent=outside, margin=roots.margin, escalated=True, trusted=False
    )


def classify(P: MomentPolynomial, *, tol: float = CIRCLE_TOLERANCE) -> Classification:
    """Place ``P`` in the interior, on the boundary surfaces, or outside.

    Boundary requires ``Res(P', P'*) = 0`` exactly, no zero of ``P'``
    strictly inside the disk and at least one confirmed surface; with
    ``Res = 0`` and no surface the polynomial is exterior. Surface tags: ``Pi+`` iff ``P'(1) = 0``,
    ``Pi-`` iff ``P'(-1) = 0``, ``A`` iff a nonreal conjugate pair lies on
    the circle (confirmed by ``V(P') = 0`` when ``2 <= deg P' <= 4``).

    Raises
    ------
    InputError:
        If ``P(0) != 0`` or ``a_1 <= 0``.
    """
    n = check_moment_polynomial(P, require_positive_a1=True)
    dP = derivative(P)
    resultant = self_reciprocal_resultant(dP)
    witness = ClassificationWitness(
        p_prime_at_1=dP(1), p_prime_at_minus_1=dP(-1), resultant=resultant
    )
    if n == 1:
        return Classification(verdict="interior", witness=witness)

    roots = find_roots(dP)
    smallest = min(abs(r) for r in roots)
    trusted = roots.trusted and roots.margin > MARGIN_ESCALATION

    if resultant != 0:
        verdict = "interior" if smallest > 1.0 else "exterior"
        logger.debug("classify: Res = %s, min|ζ| = %.6f -> %s", resultant, smallest, verdict)
        return Classification(
            verdict=verdict, witness=witness, margin=roots.margin, trusted=trusted
        )

    if smallest < 1.0 - tol:
        return Classification(
            verdict="exterior", witness=witness, margin=roots.margin, trusted=trusted
        )

    surfaces: set[Surface] = set()
    if witness.p_prime_at_1 == 0:
        surfaces.add("Pi+")
    if witness.p_prime_at_minus_1 == 0:
        surfaces.add("Pi-")
    if _has_circle_pair(roots, tol):
        degree = dP.degree
        assert degree is not None
        if 2 <= degree <= 4 and v_form_exact(dP) != 0:
            logger.warning("Circle pair found but V(P') = %s; dropping A", v_form_exact(dP))
        else:
            surfaces.add("A")
    if not surfaces:
        # Res = 0 with no circle zero: a reciprocal pair ζ, 1/ζ with one of them inside.
        logger.debug("classify: Res = 0 but no surface for %s -> exterior", P)
        return Classification(
            verdict="exterior", witness=witness, margin=roots.margin, trusted=trusted
        )
    return Classification(
        verdict="boundary",
        witness=witness,
        surfaces=frozenset(surfaces),
        margin=roots.margin,
        trusted=roots.trusted,
    )


def dilate(P: MomentPolynomial, t: Rational) -> MomentPolynomial:
    """``P_t(z) = P(t z) / t``: ``a_k -> a_k t^{k-1}``.

    The zeros of ``P_t'`` are those of ``P'`` divided by ``t``.
    """
    scale = Fraction(t)
    if scale == 0:
        raise InputError("Dilatation factor must be nonzero", parameter="t")
    check_moment_polynomial(P)
    return RatPoly(c * scale ** (k - 1) if k else c for k, c in enumerate(P.coeffs))


def resultant_sign_witness(P: MomentPolynomial) -> int:
    """Sign of ``(-1)^{n-1} Res(P', P'*)``; +1 throughout the interior."""
    n = check_moment_polynomial(P)
    value = (-1) ** (n - 1) * self_reciprocal_resultant(derivative(P))
    return (value > 0) - (value < 0)


# ── Sampler ─────────────────────────────────────────────────────────


def _draw(rng: np.random.Generator, *, positive: bool) -> Fraction:
    q = int(rng.integers(1, SAMPLER_MAX_DENOMINATOR + 1))
    bound = SAMPLER_COEFF_BOUND * q
    low = 1 if positive else -bound
    return Fraction(int(rng.integers(low, bound + 1)), q)


def _draw_candidate(rng: np.random.Generator, n: int) -> RatPoly:
    coeffs = [Fraction(0), _draw(rng, positive=True)]
    for _ in range(2, n + 1):
        coeffs.append(_draw(rng, positive=False))
    while coeffs[n] == 0:
        coeffs[n] = _draw(rng, positive=False)
    return RatPoly(coeffs)


def _round(c: Fraction) -> Fraction:
    """Nearest rational with a small denominator, never rounding a nonzero to zero."""
    out = c.limit_denominator(SAMPLER_MAX_DENOMINATOR)
    if out == 0 and c != 0:
        return Fraction(1 if c > 0 else -1, SAMPLER_MAX_DENOMINATOR)
    return out


def _accept(P: RatPoly, n: int) -> bool:
    """Interior, of full degree, and with numerically simple zeros of ``P'``."""
    if P.degree != n:
        return False
    dP = derivative(P)
    try:
        if discriminant_float(dP, find_roots(dP)) < DISCRIMINANT_FLOOR:
            return False
        return classify(P).verdict == "interior"
    except NumericalError as exc:
        logger.warning("Sampler skipped a candidate: %s", exc)
        return False


def sample_interior(
    n: int,
    seed: int,
    trials: int = DEFAULT_SAMPLER_TRIALS,
) -> list[MomentPolynomial]:
    """Rejection-sample interior polynomials of degree ``n``.

    Coefficients are rationals with denominators up to 64: ``a_1`` in
    ``(0, 10]``, the others in ``[-10, 10]``. A rejected candidate is pulled
    back along ``P(tz)/t`` with ``t = u min|ζ|`` and ``u`` uniform in
    ``(0.3, 0.9)``, re-rounded and re-classified. Each trial contributes at
    most one polynomial; the result is a function of ``seed`` alone.

    Raises
    ------
    InputError:
        If ``n < 1`` or ``trials < 1``.
    SamplerExhaustedError:
        If no trial was accepted.
    """
    if n < 1:
        raise InputError(f"Degree must be >= 1, got {n}", parameter="n")
    if trials < 1:
        raise InputError(f"trials must be >= 1, got {trials}", parameter="trials")
    rng = np.random.default_rng(seed)
    accepted: list[RatPoly] = []
    for _ in range(trials):
        P = _draw_candidate(rng, n)
        if n == 1:
            accepted.append(P)
            continue
        u = float(rng.uniform(*DILATION_RANGE))
        if _accept(P, n):
            accepted.append(P)
            continue
        try:
            nearest = min(abs(r) for r in find_roots(derivative(P)))
        except NumericalError:
            continue
        t = Fraction(u * nearest)
        pulled = RatPoly(_round(c) for c in dilate(P, t).coeffs)
        if _accept(pulled, n):
            accepted.append(pulled)

    logger.info("sample_interior: n=%d accepted %d of %d", n, len(accepted), trials)
    if not accepted:
        raise SamplerExhaustedError(
            f"No interior polynomial of degree {n} in {trials} trials", trials=trials
        )
    return accepted
