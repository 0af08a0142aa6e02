"""Tests for momentjac.types and momentjac.errors — dataclasses and error reprs."""
import dataclasses
import json
from fractions import Fraction

import pytest

from momentjac import (
    ALL_ROUTES,
    Classification,
    ClassificationWitness,
    InputError,
    JacobianMatrix,
    MomentJacError,
    MomentVector,
    NumericalError,
    RootSet,
    RunReport,
    SamplerExhaustedError,
    UnivalenceReport,
    VerificationError,
)


# ── Value types ──────────────────────────────────────────────────────


def test_moment_vector():
    mu = MomentVector((Fraction(9, 8), Fraction(1, 4)))
    assert mu.n == len(mu) == 2
    assert mu[1] == Fraction(1, 4)


def test_jacobian_matrix_entry_is_one_based_in_nu():
    J = JacobianMatrix(entries=((Fraction(2), Fraction(1, 2)), (Fraction(1), Fraction(1))))
    assert J.entry(1, 0) == 2
    assert J.entry(2, 0) == 1


def test_root_set_defaults():
    roots = RootSet(roots=(1j, -1j))
    assert len(roots) == 2
    assert list(roots) == [1j, -1j]
    assert roots.trusted
    assert roots.margin == float("inf")


def test_frozen_dataclasses():
    witness = ClassificationWitness(Fraction(1), Fraction(1), Fraction(1))
    result = Classification(verdict="interior", witness=witness)
    assert result.surfaces == frozenset()
    with pytest.raises(dataclasses.FrozenInstanceError):
        result.verdict = "exterior"  # type: ignore[misc]


def test_univalence_report_defaults():
    report = UnivalenceReport(locally_univalent=True, margin=0.5)
    assert not report.escalated
    assert report.trusted


def test_all_routes_excludes_vform():
    assert "vform" not in ALL_ROUTES
    assert ALL_ROUTES[0] == "direct"


# ── RunReport ────────────────────────────────────────────────────────


def test_run_report_ok_and_dict():
    report = RunReport(
        command="jacobian",
        inputs={"coeffs": ["0", "1"]},
        outputs={"direct": "2"},
        agreement={"toeplitz": True, "roots": True},
    )
    assert report.ok
    data = report.to_dict()
    assert data["ok"] is True
    assert "seed" not in data
    assert "timing_ms" not in data
    json.dumps(data)


def test_run_report_failure_seed_and_timing():
    report = RunReport(
        command="verify",
        inputs={"n": 2},
        outputs={},
        agreement={"routes": False},
        seed=7,
        timing_ms=1.23456,
    )
    assert not report.ok
    data = report.to_dict()
    assert data["seed"] == 7
    assert data["timing_ms"] == 1.235


def test_empty_agreement_is_ok():
    assert RunReport(command="moments", inputs={}, outputs={}).ok


# ── Errors ───────────────────────────────────────────────────────────


def test_error_hierarchy():
    for cls in (InputError, NumericalError, VerificationError, SamplerExhaustedError):
        assert issubclass(cls, MomentJacError)


def test_input_error_repr():
    err = InputError("bad a_1", parameter="a_1")
    assert err.parameter == "a_1"
    assert repr(err) == "InputError('bad a_1', parameter='a_1')"
    assert repr(InputError("plain")) == "InputError('plain')"


def test_numerical_error_repr():
    err = NumericalError("no convergence", iterations=500, residual=1e-3)
    assert repr(err) == "NumericalError('no convergence', iterations=500, residual=1.000e-03)"


def test_verification_error_repr():
    err = VerificationError("mismatch", route="toeplitz", expected=Fraction(3, 2), actual=0)
    assert err.route == "toeplitz"
    assert repr(err) == "VerificationError('mismatch', route='toeplitz', expected=3/2, actual=0)"


def test_sampler_exhausted_carries_trials():
    err = SamplerExhaustedError("nothing accepted", trials=12)
    assert err.trials == 12
    assert str(err) == "nothing accepted"
