"""Full-size sweeps — the sample counts the library is accepted against.

Run alone with ``pytest -m slow``; deselect with ``-m "not slow"``.
"""
from fractions import Fraction

import numpy as np
import pytest

from momentjac import (
    find_roots,
    hurwitz_det,
    hurwitz_det_roots,
    moments_residue,
    moments_richardson,
    self_reciprocal_resultant,
    v_form_eval,
    v_form_exact,
    w_form,
)
from momentjac._moments import residue_moment
from momentjac.cli import cmd_verify
from tests.helpers import random_poly, random_rooted_poly

pytestmark = pytest.mark.slow


def close(approx: complex, exact: Fraction, rel: float) -> bool:
    return abs(approx - float(exact)) <= rel * max(1.0, abs(float(exact)))


# ── Moments ──────────────────────────────────────────────────────────


def test_moment_routes_agree_on_200_polynomials_per_degree():
    rng = np.random.default_rng(42)
    for n in range(1, 9):
        for _ in range(200):
            P = random_poly(rng, n, constant=False)
            assert moments_richardson(P) == moments_residue(P)
            assert all(residue_moment(P, k) == 0 for k in range(n, 2 * n + 1))


# ── Jacobian sweep through the verify command ────────────────────────


@pytest.mark.parametrize("n", range(2, 9))
def test_verify_sweep(n):
    report = cmd_verify(n, 100, 42)
    outputs = report.outputs
    assert outputs["samples"] >= 50
    assert outputs["passed"] == outputs["samples"]
    assert report.ok
    assert report.agreement["routes"]
    assert report.agreement["root-forms"]
    assert report.agreement["injective"]
    assert report.agreement["finite-differences"]


# ── Hurwitz determinants ─────────────────────────────────────────────


@pytest.mark.parametrize("m", range(1, 8))
def test_hurwitz_sweep(m):
    rng = np.random.default_rng(42 + m)
    for _ in range(100):
        R = random_rooted_poly(rng, m, 0.5, 3.0) * Fraction(int(rng.integers(1, 5)))
        assert close(hurwitz_det_roots(R, find_roots(R)), hurwitz_det(R), rel=1e-8)
        stable = random_rooted_poly(rng, m, 0.25, 2.0, sign=-1)
        assert hurwitz_det(stable) > 0


# ── V and W forms ────────────────────────────────────────────────────


@pytest.mark.parametrize("degree", [3, 4])
def test_v_form_sweep(degree):
    rng = np.random.default_rng(7 * degree)
    for _ in range(100):
        A = random_poly(rng, degree)
        assert close(v_form_eval(A), v_form_exact(A), rel=1e-9)


@pytest.mark.parametrize("n", range(1, 8))
def test_w_squared_sweep(n):
    rng = np.random.default_rng(100 + n)
    checked = 0
    while checked < 100:
        A = random_poly(rng, n)
        roots = find_roots(A)
        if not roots.trusted or roots.margin < 1e-3:
            continue
        expected = (-1) ** n * self_reciprocal_resultant(A) * A(-1) * A(1)
        assert close(w_form(A, roots) ** 2, expected, rel=1e-8)
        checked += 1
