"""Simultaneous (Aberth-Ehrlich) root finding with certification data."""

from __future__ import annotations

import logging
import math

import numpy as np
import numpy.typing as npt
from numpy.polynomial import polynomial as npoly

from ._constants import (
    ABERTH_MAX_ITERATIONS,
    ABERTH_STEP_TOLERANCE,
    MULTIPLE_ROOT_SEPARATION,
    PAIRING_TOLERANCE,
    ROOT_RESIDUAL_BOUND,
)
from ._polycore import RatPoly
from .errors import InputError, NumericalError
from .types import RootSet

logger = logging.getLogger("momentjac")

# Keeps the start points off the real axis so conjugate roots can separate.
_START_ANGLE = 0.4


def _aberth(
    coeffs: npt.NDArray[np.complex128], max_iterations: int
) -> tuple[npt.NDArray[np.complex128], int]:
    """Run the Aberth iteration on ascending, monic ``coeffs``."""
    degree = len(coeffs) - 1
    deriv = npoly.polyder(coeffs)
    radius = 1.0 + float(np.max(np.abs(coeffs[:-1])))
    angles = 2 * math.pi * np.arange(degree) / degree + _START_ANGLE
    z = radius * np.exp(1j * angles)

    for iteration in range(1, max_iterations + 1):
        values = npoly.polyval(z, coeffs)
        slopes = npoly.polyval(z, deriv)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        repulsion = (1.0 / diff).sum(axis=1) - 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = values / slopes
            step = ratio / (1.0 - ratio * repulsion)
        # A root landed exactly; its step is zero.
        step = np.where(values == 0, 0.0, step)
        if not np.all(np.isfinite(step)):
            raise NumericalError(
                "Aberth iteration produced a non-finite step",
                iterations=iteration,
                residual=float("nan"),
            )
        z = z - step
        if float(np.max(np.abs(step))) < ABERTH_STEP_TOLERANCE * radius:
            return z, iteration

    logger.warning("Aberth iteration hit the cap of %d steps", max_iterations)
    return z, max_iterations


def _newton_polish(
    z: npt.NDArray[np.complex128], coeffs: npt.NDArray[np.complex128]
) -> npt.NDArray[np.complex128]:
    """One Newton step per root, kept only where it lowers the residual."""
    deriv = npoly.polyder(coeffs)
    values = npoly.polyval(z, coeffs)
    slopes = npoly.polyval(z, deriv)
    with np.errstate(divide="ignore", invalid="ignore"):
        candidate = z - values / slopes
    better = np.isfinite(candidate) & (
        np.abs(npoly.polyval(candidate, coeffs)) < np.abs(values)
    )
    return np.where(better, candidate, z)


def _pair_conjugates(z: npt.NDArray[np.complex128]) -> list[complex]:
    """Snap near-real roots to the axis and average conjugate partners."""
    pending = [complex(v) for v in z]
    out: list[complex] = []
    while pending:
        root = pending.pop(0)
        if abs(root.imag) <= PAIRING_TOLERANCE * max(1.0, abs(root)):
            out.append(complex(root.real, 0.0))
            continue
        target = root.conjugate()
        partner = min(range(len(pending)), key=lambda i: abs(pending[i] - target), default=None)
        if partner is None:
            logger.warning("Root %s has no conjugate partner", root)
            out.append(root)
            continue
        other = pending.pop(partner)
        gap = abs(other - target)
        if gap > math.sqrt(PAIRING_TOLERANCE) * max(1.0, abs(root)):
            logger.warning("Conjugate pairing gap %.3e for root %s", gap, root)
        mean = (root + other.conjugate()) / 2
        upper = complex(mean.real, abs(mean.imag))
        out.extend((upper, upper.conjugate()))
    return sorted(out, key=lambda r: (r.real, r.imag))


def _backward_residual(root: complex, coeffs: npt.NDArray[np.complex128]) -> float:
    value = abs(complex(npoly.polyval(root, coeffs)))
    scale = float(np.sum(np.abs(coeffs) * abs(root) ** np.arange(len(coeffs))))
    return value / scale if scale else value


def find_roots(p: RatPoly, *, max_iterations: int = ABERTH_MAX_ITERATIONS) -> RootSet:
    """All complex roots of ``p`` with multiplicity.

    Starts on the circle of the Cauchy bound ``1 + max|c_k / c_n|``, iterates
    until the largest correction is below ``1e-14`` times that radius, then
    takes one Newton step per root. For real coefficients conjugate pairs
    are symmetrized exactly.

    Raises
    ------
    InputError:
        If ``p`` is zero or constant.
    NumericalError:
        If a root's backward-relative residual stays above ``1e-11``.
    """
    degree = p.degree
    if degree is None or degree < 1:
        raise InputError("find_roots needs a polynomial of degree >= 1", parameter="p")

    coeffs = p.as_complex_array() / float(p.leading)
    if degree == 1:
        z = np.array([-coeffs[0]], dtype=np.complex128)
        iterations = 0
    else:
        z, iterations = _aberth(coeffs, max_iterations)
        z = _newton_polish(z, coeffs)

    roots = _pair_conjugates(z)
    residual = max(_backward_residual(r, coeffs) for r in roots)
    if residual > ROOT_RESIDUAL_BOUND:
        logger.error("Root residual %.3e after %d iterations", residual, iterations)
        raise NumericalError(
            f"Roots of a degree-{degree} polynomial did not certify",
            iterations=iterations,
            residual=residual,
        )

    margin = min(abs(abs(r) - 1.0) for r in roots)
    separation = min(
        (abs(a - b) / max(1.0, abs(a)) for i, a in enumerate(roots) for b in roots[i + 1 :]),
        default=math.inf,
    )
    trusted = separation > MULTIPLE_ROOT_SEPARATION
    if not trusted:
        logger.warning("Numerically multiple roots (separation %.3e)", separation)
    logger.debug(
        "find_roots: degree %d, %d iterations, residual %.3e, margin %.3e",
        degree,
        iterations,
        residual,
        margin,
    )
    return RootSet(roots=tuple(roots), residual_bound=residual, margin=margin, trusted=trusted)


def discriminant_float(p: RatPoly, roots: RootSet) -> float:
    """``|c_n^{2n-2} Π_{i<j} (ζ_i - ζ_j)^2|`` from the computed roots."""
    zs = roots.roots
    n = len(zs)
    product = complex(1.0)
    for i in range(n):
        for j in range(i + 1, n):
            product *= (zs[i] - zs[j]) ** 2
    return abs(float(p.leading) ** (2 * n - 2) * product)


def is_on_circle(root: complex, tol: float) -> bool:
    return abs(abs(root) - 1.0) <= tol
