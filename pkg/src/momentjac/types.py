from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Literal, Optional

from ._linalg import Matrix
from ._polycore import RatPoly


# ── Literal aliases ─────────────────────────────────────────────────

Verdict = Literal["interior", "boundary", "exterior"]
Surface = Literal["Pi+", "Pi-", "A"]
Route = Literal["direct", "toeplitz", "roots", "ullemar", "resultant-squared", "vform"]
OutputFormat = Literal["table", "json"]

ALL_ROUTES: tuple[Route, ...] = ("direct", "toeplitz", "roots", "ullemar", "resultant-squared")


# ── Moments ─────────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class MomentVector:
    """The image ``μ(P) = (M_0, ..., M_{n-1})`` of a degree-``n`` polynomial."""

    values: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


# ── Matrices ────────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class JacobianMatrix:
    """``dμ(P)`` with rows ``ν = 1..n`` (coefficient ``a_ν``) and columns ``k = 0..n-1``.

    ``entries[ν-1][k] = ∂M_k / ∂a_ν``. The orientation is fixed once and
    never transposed.
    """

    entries: Matrix

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, nu: int, k: int) -> Fraction:
        return self.entries[nu - 1][k]


@dataclass(frozen=True, slots=True)
class ToeplitzMatrix:
    """Symmetric Toeplitz matrix ``T(x)`` with ``T[i][k] = x[|i-k|]``."""

    generator: tuple[Fraction, ...]
    entries: Matrix


@dataclass(frozen=True, slots=True)
class DualMatrix:
    """The dual matrix ``B(y)`` defined by ``T(x) y^T = B(y) x^T`` for every ``x``."""

    generator: tuple[Fraction, ...]
    entries: Matrix


@dataclass(frozen=True, slots=True)
class SymmetrizedPowerTable:
    """``h[m][k]``: coefficient of ``z^m`` in ``P^k(z) + P^k(1/z)``, ``0 <= m, k <= n-1``."""

    h: Matrix


@dataclass(frozen=True, slots=True)
class HurwitzMatrix:
    """Hurwitz matrix ``G(R)`` with 1-based entries ``G[i][j] = r_{m+i-2j}``."""

    source: RatPoly
    entries: Matrix


# ── Roots and classification ────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class RootSet:
    """All complex roots of a polynomial, with certification data.

    ``residual_bound`` is the largest backward-relative residual
    ``|p(ζ)| / Σ|p_k||ζ|^k`` over the roots. ``margin`` is the smallest
    distance ``||ζ| - 1|`` to the unit circle (``inf`` for an empty set).
    ``trusted`` is false when the roots are (numerically) multiple.
    """

    roots: tuple[complex, ...]
    residual_bound: float = 0.0
    margin: float = float("inf")
    trusted: bool = True

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[complex]:
        return iter(self.roots)


@dataclass(frozen=True, slots=True)
class ClassificationWitness:
    """Exact values backing a verdict: ``P'(1)``, ``P'(-1)`` and ``Res(P', P'*)``."""

    p_prime_at_1: Fraction
    p_prime_at_minus_1: Fraction
    resultant: Fraction


@dataclass(frozen=True, slots=True)
class Classification:
    """Position of a polynomial relative to the locally univalent class.

    ``surfaces`` is only meaningful for ``verdict == "boundary"``.
    """

    verdict: Verdict
    witness: ClassificationWitness
    surfaces: frozenset[Surface] = frozenset()
    margin: float = float("inf")
    trusted: bool = True


@dataclass(frozen=True, slots=True)
class UnivalenceReport:
    """Result of :func:`is_locally_univalent`.

    ``escalated`` is true when the float margin was too small to decide and
    the exact boundary test produced the answer.
    """

    locally_univalent: bool
    margin: float
    escalated: bool = False
    trusted: bool = True


# ── CLI report ──────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class RunReport:
    """Machine-readable outcome of one CLI command.

    Rationals are carried as ``"p/q"`` strings so the report survives JSON
    serialization exactly.
    """

    command: str
    inputs: dict[str, Any]
    outputs: dict[str, Any]
    agreement: dict[str, bool] = field(default_factory=dict)
    seed: Optional[int] = None
    timing_ms: Optional[float] = None

    @property
    def ok(self) -> bool:
        return all(self.agreement.values())

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "agreement": self.agreement,
            "ok": self.ok,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        if self.timing_ms is not None:
            out["timing_ms"] = round(self.timing_ms, 3)
        return out
