"""Tests for momentjac.cli — argument parsing, commands, reports and exit codes."""
import json
from fractions import Fraction

import pytest

from momentjac import InputError, RatPoly, __version__
from momentjac.cli import (
    EXIT_INPUT,
    EXIT_OK,
    EXIT_VERIFICATION,
    check_sample,
    main,
    parse_coeffs,
    parse_routes,
)


def run_json(capsys, *argv: str) -> tuple[int, dict]:
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out) if out else {}


# ── Parsing ──────────────────────────────────────────────────────────


def test_parse_coeffs():
    assert parse_coeffs("0, 1, 1/4") == RatPoly([0, 1, Fraction(1, 4)])
    assert parse_coeffs("0,-3/2") == RatPoly([0, Fraction(-3, 2)])


@pytest.mark.parametrize("text", ["0,1,x", "0,1/0", "", "0,,1"])
def test_parse_coeffs_rejects_garbage(text):
    with pytest.raises(InputError) as exc:
        parse_coeffs(text)
    assert exc.value.parameter == "coeffs"


def test_parse_routes():
    assert parse_routes("all") == ["direct", "toeplitz", "roots", "ullemar", "resultant-squared"]
    assert parse_routes("direct, vform") == ["direct", "vform"]
    with pytest.raises(InputError):
        parse_routes("direct,magic")


# ── moments ──────────────────────────────────────────────────────────


def test_moments_json(capsys):
    code, report = run_json(capsys, "moments", "--coeffs", "0,1,1/4")
    assert code == EXIT_OK
    assert report["command"] == "moments"
    assert report["outputs"]["moments"] == ["9/8", "1/4"]
    assert report["ok"] is True


def test_moments_with_cauchy_terms(capsys):
    code, report = run_json(capsys, "moments", "--coeffs", "0,1,1/4", "--terms", "4")
    assert code == EXIT_OK
    assert report["outputs"]["cauchy"] == {"z^-1": "9/8", "z^-2": "1/4"}


def test_moments_rejects_constant_term(capsys):
    assert main(["moments", "--coeffs", "1,1"]) == EXIT_INPUT
    assert "error" in capsys.readouterr().err


def test_moments_table_format(capsys):
    assert main(["moments", "--coeffs", "0,1,1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "command: moments" in out
    assert "- 3" in out
    assert "ok: true" in out


# ── jacobian ─────────────────────────────────────────────────────────


def test_jacobian_all_routes(capsys):
    code, report = run_json(capsys, "jacobian", "--coeffs", "0,1,1/4")
    assert code == EXIT_OK
    outputs = report["outputs"]
    assert outputs["direct"] == "3/2"
    assert outputs["toeplitz"] == "3/2"
    assert outputs["ullemar"] == "3/2"
    assert outputs["resultant-squared"] == "9/4"
    assert float(outputs["roots"]) == pytest.approx(1.5)
    assert all(report["agreement"].values())


def test_jacobian_route_subset(capsys):
    code, report = run_json(
        capsys, "jacobian", "--coeffs", "0,1,1", "--routes", "direct,vform"
    )
    assert code == EXIT_OK
    assert report["outputs"] == {"direct": "-6", "vform": "-6"}
    assert report["inputs"]["routes"] == ["direct", "vform"]


def test_jacobian_unknown_route(capsys):
    assert main(["jacobian", "--coeffs", "0,1", "--routes", "nope"]) == EXIT_INPUT


def test_jacobian_vform_out_of_range(capsys):
    assert main(["jacobian", "--coeffs", "0,1", "--routes", "vform"]) == EXIT_INPUT


def test_jacobian_reports_when_root_forms_disagree(capsys):
    # P' = 8(1 + z/2)^3: a triple zero blurs the two root-product forms
    code, report = run_json(capsys, "jacobian", "--coeffs", "0,8,6,2,1/4")
    assert code == EXIT_VERIFICATION
    assert report["ok"] is False
    assert report["agreement"]["root-forms"] is False
    outputs = report["outputs"]
    assert outputs["direct"] == outputs["toeplitz"] == outputs["ullemar"]
    assert report["agreement"]["toeplitz"] and report["agreement"]["ullemar"]


def test_timing_is_reported(capsys):
    code, report = run_json(capsys, "jacobian", "--coeffs", "0,2", "--timing")
    assert code == EXIT_OK
    assert report["timing_ms"] >= 0
    assert report["outputs"]["direct"] == "4"


# ── classify ─────────────────────────────────────────────────────────


@pytest.mark.parametrize(
    "coeffs, verdict, surfaces",
    [
        ("0,1,1/4", "interior", []),
        ("0,1,1", "exterior", []),
        ("0,1,1/2", "boundary", ["Pi-"]),
        ("0,1,0,1/3", "boundary", ["A"]),
        ("0,1,1/2,1/3,1/4", "boundary", ["A", "Pi-"]),
    ],
)
def test_classify(capsys, coeffs, verdict, surfaces):
    code, report = run_json(capsys, "classify", "--coeffs", coeffs)
    assert code == EXIT_OK
    assert report["outputs"]["verdict"] == verdict
    assert report["outputs"]["surfaces"] == surfaces


def test_classify_forwards_tol(capsys, monkeypatch):
    import momentjac.cli as cli

    seen = {}
    real = cli.classify

    def spy(P, *, tol):
        seen["tol"] = tol
        return real(P, tol=tol)

    monkeypatch.setattr(cli, "classify", spy)
    code, report = run_json(capsys, "classify", "--coeffs", "0,1,1/4", "--tol", "1e-4")
    assert code == EXIT_OK
    assert seen["tol"] == 1e-4
    assert report["outputs"]["verdict"] == "interior"


def test_moments_has_no_tol_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["moments", "--coeffs", "0,1", "--tol", "1e-3"])
    assert exc.value.code == 2


def test_classify_witness_strings(capsys):
    _, report = run_json(capsys, "classify", "--coeffs", "0,1,1/4")
    outputs = report["outputs"]
    assert outputs["p_prime_at_1"] == "3/2"
    assert outputs["p_prime_at_minus_1"] == "1/2"
    assert outputs["resultant"] == "-3/4"


def test_classify_requires_positive_a1(capsys):
    assert main(["classify", "--coeffs", "0,-1,1"]) == EXIT_INPUT


# ── verify ───────────────────────────────────────────────────────────


def test_verify_linear(capsys):
    code, report = run_json(capsys, "verify", "--n", "1", "--trials", "10", "--seed", "3")
    assert code == EXIT_OK
    assert report["seed"] == 3
    assert report["outputs"]["samples"] == 10
    assert report["outputs"]["passed"] == 10
    assert report["outputs"]["failed"] == 0


def test_verify_cubic(capsys):
    code, report = run_json(capsys, "verify", "--n", "3", "--trials", "10", "--seed", "5")
    assert code == EXIT_OK
    outputs = report["outputs"]
    assert outputs["samples"] >= 1
    assert outputs["passed"] == outputs["samples"]
    assert set(report["agreement"]) == {
        "moments",
        "routes",
        "root-forms",
        "injective",
        "finite-differences",
        "sign-witness",
        "dilatation",
    }


def test_verify_is_deterministic(capsys):
    argv = ["verify", "--n", "2", "--trials", "8", "--seed", "11", "--format", "json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


@pytest.mark.parametrize("n", ["0", "11"])
def test_verify_degree_bounds(capsys, n):
    assert main(["verify", "--n", n, "--trials", "5"]) == EXIT_INPUT


def test_check_sample_on_exterior_polynomial():
    checks = check_sample(RatPoly([0, 1, 1]))
    assert checks["routes"]
    assert not checks["sign-witness"]
    assert not checks["dilatation"]


def test_failed_check_exits_with_verification_code(capsys, monkeypatch):
    import momentjac.cli as cli

    monkeypatch.setattr(cli, "check_sample", lambda P, tol: {"routes": False})
    code, report = run_json(capsys, "verify", "--n", "1", "--trials", "2")
    assert code == EXIT_VERIFICATION
    assert report["ok"] is False
    assert report["outputs"]["failures"] == {"routes": 2}


# ── Entry point ──────────────────────────────────────────────────────


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_missing_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
