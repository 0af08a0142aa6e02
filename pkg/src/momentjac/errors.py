from typing import Any, Optional


class MomentJacError(Exception):
    """Base exception for all momentjac errors."""


class InputError(MomentJacError):
    """A precondition on the input polynomial, vector or index does not hold."""

    def __init__(self, message: str, *, parameter: Optional[str] = None) -> None:
        super().__init__(message)
        self.parameter = parameter

    def __repr__(self) -> str:
        parts = [f"InputError({self.args[0]!r}"]
        if self.parameter is not None:
            parts.append(f", parameter={self.parameter!r}")
        parts.append(")")
        return "".join(parts)


class NumericalError(MomentJacError):
    """The floating root finder failed to converge or to certify its residuals."""

    def __init__(
        self,
        message: str,
        *,
        iterations: Optional[int] = None,
        residual: Optional[float] = None,
    ) -> None:
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual

    def __repr__(self) -> str:
        parts = [f"NumericalError({self.args[0]!r}"]
        if self.iterations is not None:
            parts.append(f", iterations={self.iterations}")
        if self.residual is not None:
            parts.append(f", residual={self.residual:.3e}")
        parts.append(")")
        return "".join(parts)


class VerificationError(MomentJacError):
    """Two independent routes that must agree produced different values."""

    def __init__(
        self,
        message: str,
        *,
        route: Optional[str] = None,
        expected: Any = None,
        actual: Any = None,
    ) -> None:
        super().__init__(message)
        self.route = route
        self.expected = expected
        self.actual = actual

    def __repr__(self) -> str:
        parts = [f"VerificationError({self.args[0]!r}"]
        if self.route is not None:
            parts.append(f", route={self.route!r}")
        if self.expected is not None:
            parts.append(f", expected={self.expected!s}")
        if self.actual is not None:
            parts.append(f", actual={self.actual!s}")
        parts.append(")")
        return "".join(parts)


class SamplerExhaustedError(MomentJacError):
    """Rejection sampling accepted nothing within the trial budget."""

    def __init__(self, message: str, *, trials: Optional[int] = None) -> None:
        super().__init__(message)
        self.trials = trials
