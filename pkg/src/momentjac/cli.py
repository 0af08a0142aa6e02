"""Command-line front end: ``momentjac {moments,jacobian,verify,classify}``.

Coefficients are comma-separated exact rationals listed from the constant
term upward, e.g. ``--coeffs 0,1,1/4`` for ``z + z^2/4``.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from collections.abc import Sequence
from dataclasses import replace
from fractions import Fraction
from typing import Any, Callable, Optional, cast

from ._constants import CIRCLE_TOLERANCE, FD_TOLERANCE, FLOAT_TOLERANCE, MAX_DEGREE
from ._jacobian import RouteValue, evaluate_routes, fd_max_deviation
from ._moments import cauchy_series, moment_map, moments_residue, residue_moment
from ._polycore import RatPoly
from ._univalence import classify, dilate, resultant_sign_witness, sample_interior
from ._version import __version__
from .errors import (
    InputError,
    MomentJacError,
    NumericalError,
    SamplerExhaustedError,
    VerificationError,
)
from .types import ALL_ROUTES, Route, RunReport

logger = logging.getLogger("momentjac")

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3

_ROUTE_NAMES: tuple[Route, ...] = (*ALL_ROUTES, "vform")

# t slightly below 1 for the dilatation spot check.
_DILATION_PROBE = Fraction(999, 1000)


# ── Parsing ─────────────────────────────────────────────────────────


def parse_coeffs(text: str) -> RatPoly:
    """Parse ``"0,1,1/4"`` into ``z + z^2/4``.

    Raises
    ------
    InputError:
        If an entry is not an exact rational.
    """
    values = []
    for raw in text.split(","):
        item = raw.strip()
        try:
            values.append(Fraction(item))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"Not a rational coefficient: {item!r}", parameter="coeffs") from exc
    if not values:
        raise InputError("No coefficients given", parameter="coeffs")
    return RatPoly(values)


def parse_routes(text: str) -> list[Route]:
    if text.strip() == "all":
        return list(ALL_ROUTES)
    routes: list[Route] = []
    for raw in text.split(","):
        name = raw.strip()
        if name not in _ROUTE_NAMES:
            raise InputError(
                f"Unknown route {name!r}; choose from {', '.join(_ROUTE_NAMES)} or 'all'",
                parameter="routes",
            )
        routes.append(cast(Route, name))
    return routes


def _fmt(value: RouteValue) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return f"{value.real:.12g}"


def _coeff_strings(P: RatPoly) -> list[str]:
    return [str(c) for c in P.coeffs]


# ── Commands ────────────────────────────────────────────────────────


def cmd_moments(P: RatPoly, *, terms: Optional[int] = None) -> RunReport:
    """Moments ``M_0..M_{n-1}`` and, with ``terms``, the Cauchy-transform germ."""
    moments = moment_map(P)
    outputs: dict[str, Any] = {"moments": [str(v) for v in moments.values]}
    if terms is not None:
        series = cauchy_series(P, terms)
        terms_desc = sorted(series.terms.items(), reverse=True)
        outputs["cauchy"] = {f"z^{m}": str(c) for m, c in terms_desc}
    return RunReport(
        command="moments",
        inputs={"coeffs": _coeff_strings(P)},
        outputs=outputs,
        agreement={"richardson=residue": True},
    )


def cmd_jacobian(
    P: RatPoly, routes: Sequence[Route] = ALL_ROUTES, *, tol: float = FLOAT_TOLERANCE
) -> RunReport:
    """Evaluate ``J(P)`` on each requested route and compare against the direct value."""
    values, agreement = evaluate_routes(P, routes, tol=tol)
    return RunReport(
        command="jacobian",
        inputs={"coeffs": _coeff_strings(P), "routes": list(routes)},
        outputs={route: _fmt(value) for route, value in values.items()},
        agreement=agreement,
    )


def check_sample(P: RatPoly, *, tol: float = FLOAT_TOLERANCE) -> dict[str, bool]:
    """Run every identity that must hold for an interior polynomial."""
    n = len(P) - 1
    checks: dict[str, bool] = {}

    moments = moments_residue(P)
    checks["moments"] = moment_map(P) == moments and all(
        residue_moment(P, k) == 0 for k in range(n, 2 * n + 1)
    )

    values, agreement = evaluate_routes(P, ALL_ROUTES, tol=tol)
    forms_agree = agreement.pop("root-forms")
    checks["routes"] = all(agreement.values())
    checks["root-forms"] = forms_agree

    checks["injective"] = values["direct"] != 0
    checks["finite-differences"] = fd_max_deviation(P) <= FD_TOLERANCE
    checks["sign-witness"] = resultant_sign_witness(P) == 1
    checks["dilatation"] = classify(dilate(P, _DILATION_PROBE)).verdict == "interior"
    return checks


def cmd_verify(
    n: int, trials: int, seed: int, *, tol: float = FLOAT_TOLERANCE
) -> RunReport:
    """Sample interior polynomials and run :func:`check_sample` on each."""
    if not 1 <= n <= MAX_DEGREE:
        raise InputError(f"n must be in 1..{MAX_DEGREE}, got {n}", parameter="n")
    samples = sample_interior(n, seed, trials)
    failures: dict[str, int] = {}
    passed = 0
    for index, P in enumerate(samples):
        checks = check_sample(P, tol=tol)
        for name, ok in checks.items():
            failures.setdefault(name, 0)
            if not ok:
                failures[name] += 1
        if all(checks.values()):
            passed += 1
        else:
            logger.warning("Sample %d failed: %s", index, P)
        logger.info("verify: %d/%d samples checked", index + 1, len(samples))
    return RunReport(
        command="verify",
        inputs={"n": n, "trials": trials},
        outputs={
            "samples": len(samples),
            "passed": passed,
            "failed": len(samples) - passed,
            "failures": failures,
        },
        agreement={name: count == 0 for name, count in failures.items()},
        seed=seed,
    )


def cmd_classify(P: RatPoly, *, tol: float = CIRCLE_TOLERANCE) -> RunReport:
    """Verdict, surfaces and the exact witnesses."""
    result = classify(P, tol=tol)
    witness = result.witness
    consistent = result.verdict != "boundary" or witness.resultant == 0
    return RunReport(
        command="classify",
        inputs={"coeffs": _coeff_strings(P)},
        outputs={
            "verdict": result.verdict,
            "surfaces": sorted(result.surfaces),
            "p_prime_at_1": str(witness.p_prime_at_1),
            "p_prime_at_minus_1": str(witness.p_prime_at_minus_1),
            "resultant": str(witness.resultant),
            "trusted": result.trusted,
        },
        agreement={"boundary-resultant": consistent},
    )


# ── Rendering ───────────────────────────────────────────────────────


def _render_lines(value: Any, indent: int) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
        return lines
    if isinstance(value, list):
        return [f"{pad}- {_scalar(item)}" for item in value]
    return [f"{pad}{_scalar(value)}"]


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, dict)):
        return "[]" if isinstance(value, list) else "{}"
    return str(value)


def render(report: RunReport, fmt: str) -> str:
    """Serialize a report as an indented table or as JSON."""
    data = report.to_dict()
    if fmt == "json":
        return json.dumps(data, indent=2, ensure_ascii=False)
    return "\n".join(_render_lines(data, 0))


# ── Entry point ─────────────────────────────────────────────────────


def _add_tol(parser: argparse.ArgumentParser, default: float, what: str) -> None:
    parser.add_argument(
        "--tol", type=float, default=default, help=f"{what} (default: {default:g})."
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["table", "json"], default="table", help="Output format."
    )
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging to stderr.")
    common.add_argument(
        "--timing", action="store_true", help="Add wall-clock timing_ms to the report."
    )

    parser = argparse.ArgumentParser(
        prog="momentjac",
        description="Complex moments of polynomial images of the disk and their Jacobian.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    moments = sub.add_parser("moments", parents=[common], help="Compute μ(P).")
    moments.add_argument("--coeffs", required=True, help="Coefficients a_0,a_1,...,a_n.")
    moments.add_argument("--terms", type=int, default=None, help="Cauchy series length.")

    jacobian = sub.add_parser("jacobian", parents=[common], help="Evaluate J(P) by route.")
    jacobian.add_argument("--coeffs", required=True, help="Coefficients a_0,a_1,...,a_n.")
    jacobian.add_argument(
        "--routes",
        default="all",
        help=f"Comma-separated subset of {', '.join(_ROUTE_NAMES)}, or 'all'.",
    )
    _add_tol(jacobian, FLOAT_TOLERANCE, "Float agreement tolerance")

    verify = sub.add_parser("verify", parents=[common], help="Run the identity sweep.")
    verify.add_argument("--n", type=int, required=True, help=f"Degree, 1..{MAX_DEGREE}.")
    verify.add_argument("--trials", type=int, default=100, help="Sampler trials.")
    verify.add_argument("--seed", type=int, default=0, help="Sampler seed.")
    _add_tol(verify, FLOAT_TOLERANCE, "Float agreement tolerance")

    classify_cmd = sub.add_parser("classify", parents=[common], help="Classify P.")
    classify_cmd.add_argument("--coeffs", required=True, help="Coefficients a_0,a_1,...,a_n.")
    _add_tol(classify_cmd, CIRCLE_TOLERANCE, "Unit-circle tolerance for root locations")
    return parser


def _dispatch(args: argparse.Namespace) -> RunReport:
    handlers: dict[str, Callable[[], RunReport]] = {
        "moments": lambda: cmd_moments(parse_coeffs(args.coeffs), terms=args.terms),
        "jacobian": lambda: cmd_jacobian(
            parse_coeffs(args.coeffs), parse_routes(args.routes), tol=args.tol
        ),
        "verify": lambda: cmd_verify(args.n, args.trials, args.seed, tol=args.tol),
        "classify": lambda: cmd_classify(parse_coeffs(args.coeffs), tol=args.tol),
    }
    return handlers[args.command]()


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    started = time.perf_counter()
    try:
        report = _dispatch(args)
    except (InputError, SamplerExhaustedError) as exc:
        print(f"momentjac: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationError as exc:
        print(f"momentjac: verification failed: {exc!r}", file=sys.stderr)
        return EXIT_VERIFICATION
    except NumericalError as exc:
        print(f"momentjac: numerical failure: {exc!r}", file=sys.stderr)
        return EXIT_NUMERICAL
    except MomentJacError as exc:
        print(f"momentjac: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION

    if args.timing:
        elapsed = (time.perf_counter() - started) * 1000
        report = replace(report, timing_ms=elapsed)
    print(render(report, args.format))
    return EXIT_OK if report.ok else EXIT_VERIFICATION
