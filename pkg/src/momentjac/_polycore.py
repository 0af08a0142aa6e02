"""Exact dense polynomials and finite Laurent series over the rationals.

Everything here is exact: coefficients are ``fractions.Fraction`` and no
floating point value is ever produced except by the explicit
``RatPoly.as_complex_array`` / ``RatPoly.evaluate_complex`` helpers used by
the numerical modules.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from types import MappingProxyType
from typing import Optional, Union

import numpy as np
import numpy.typing as npt

from .errors import InputError

logger = logging.getLogger("momentjac")

Rational = Union[int, Fraction]


def _to_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"Expected int or Fraction, got {type(value).__name__}")


# ── RatPoly ──────────────────────────────────────────────────────────


class RatPoly:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[j]`` holds the coefficient of ``z**j``. Trailing zeros are
    stripped on construction, so the zero polynomial has ``coeffs == ()``
    and ``degree is None`` (the "minus infinity" degree).

    Instances are immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()) -> None:
        values = [_to_fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(values)

    @classmethod
    def monomial(cls, power: int, coefficient: Rational = 1) -> RatPoly:
        if power < 0:
            raise InputError("Monomial power must be nonnegative", parameter="power")
        return cls([0] * power + [coefficient])

    @classmethod
    def constant(cls, value: Rational) -> RatPoly:
        return cls([value])

    # ── Properties ───────────────────────────────────────────────────

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> Optional[int]:
        """Index of the last nonzero coefficient; ``None`` for the zero polynomial."""
        if not self._coeffs:
            return None
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading(self) -> Fraction:
        if not self._coeffs:
            return Fraction(0)
        return self._coeffs[-1]

    def coefficient(self, j: int) -> Fraction:
        """Coefficient of ``z**j``; zero outside the stored range."""
        if 0 <= j < len(self._coeffs):
            return self._coeffs[j]
        return Fraction(0)

    # ── Arithmetic ───────────────────────────────────────────────────

    def __add__(self, other: Union[RatPoly, Rational]) -> RatPoly:
        rhs = other if isinstance(other, RatPoly) else RatPoly.constant(other)
        size = max(len(self._coeffs), len(rhs._coeffs))
        return RatPoly(self.coefficient(j) + rhs.coefficient(j) for j in range(size))

    __radd__ = __add__

    def __neg__(self) -> RatPoly:
        return RatPoly(-c for c in self._coeffs)

    def __sub__(self, other: Union[RatPoly, Rational]) -> RatPoly:
        rhs = other if isinstance(other, RatPoly) else RatPoly.constant(other)
        return self + (-rhs)

    def __rsub__(self, other: Rational) -> RatPoly:
        return RatPoly.constant(other) - self

    def __mul__(self, other: Union[RatPoly, Rational]) -> RatPoly:
        if not isinstance(other, RatPoly):
            scalar = _to_fraction(other)
            return RatPoly(scalar * c for c in self._coeffs)
        if self.is_zero or other.is_zero:
            return RatPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RatPoly:
        if exponent < 0:
            raise InputError("Negative powers are not polynomials", parameter="exponent")
        result = RatPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def truncate(self, degree: int) -> RatPoly:
        """Drop every term above ``z**degree``."""
        return RatPoly(self._coeffs[: degree + 1])

    def powers(self, count: int, *, max_degree: Optional[int] = None) -> list[RatPoly]:
        """Return ``[self**0, self**1, ..., self**(count-1)]``.

        With ``max_degree`` each power is cut above ``z**max_degree``; the
        kept coefficients are still exact.
        """
        out = [RatPoly.constant(1)]
        for _ in range(1, count):
            power = out[-1] * self
            out.append(power if max_degree is None else power.truncate(max_degree))
        return out[:count]

    # ── Evaluation ───────────────────────────────────────────────────

    def __call__(self, z: Rational) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        point = _to_fraction(z)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * point + c
        return acc

    def evaluate_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self._coeffs):
            acc = acc * z + float(c)
        return acc

    def as_complex_array(self) -> npt.NDArray[np.complex128]:
        """Ascending float coefficients for the numerical routines."""
        return np.array([float(c) for c in self._coeffs], dtype=np.complex128)

    # ── Dunder plumbing ──────────────────────────────────────────────

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == RatPoly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        # Constants compare equal to their scalar, so they must hash like it.
        if len(self._coeffs) <= 1:
            return hash(self.coefficient(0))
        return hash(("RatPoly", self._coeffs))

    def __repr__(self) -> str:
        return f"RatPoly([{', '.join(str(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for j, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            elif j == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{j}")
        return " + ".join(terms)


# Semantic alias: a RatPoly with zero constant term, used as a moment-map argument.
MomentPolynomial = RatPoly


def check_moment_polynomial(p: RatPoly, *, require_positive_a1: bool = False) -> int:
    """Validate ``P(0) = 0`` (and optionally ``a_1 > 0``); return the degree ``n >= 1``."""
    if p.is_zero:
        raise InputError("The zero polynomial has no moments", parameter="P")
    if p.coefficient(0) != 0:
        raise InputError(
            f"Moment polynomials need P(0) = 0, got constant term {p.coefficient(0)}",
            parameter="P",
        )
    if require_positive_a1 and p.coefficient(1) <= 0:
        raise InputError(f"Need a_1 > 0, got a_1 = {p.coefficient(1)}", parameter="a_1")
    degree = p.degree
    assert degree is not None
    return degree


# ── LaurentSeries ────────────────────────────────────────────────────


class LaurentSeries:
    """Finite map from integer exponents to rational coefficients.

    Absent exponents have coefficient zero; zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, Rational]] = None) -> None:
        clean: dict[int, Fraction] = {}
        for exponent, value in (terms or {}).items():
            c = _to_fraction(value)
            if c != 0:
                clean[int(exponent)] = c
        self._terms = MappingProxyType(dict(sorted(clean.items())))

    @classmethod
    def from_poly(cls, p: RatPoly, shift: int = 0) -> LaurentSeries:
        """``z**shift * p(z)`` as a Laurent series."""
        return cls({j + shift: c for j, c in enumerate(p.coeffs)})

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return self._terms

    def coefficient(self, m: int) -> Fraction:
        return self._terms.get(m, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def shift(self, s: int) -> LaurentSeries:
        """Multiply by ``z**s``."""
        return LaurentSeries({m + s: c for m, c in self._terms.items()})

    def __add__(self, other: LaurentSeries) -> LaurentSeries:
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return LaurentSeries(out)

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: LaurentSeries) -> LaurentSeries:
        return self + (-other)

    def __mul__(self, other: Union[LaurentSeries, Rational]) -> LaurentSeries:
        if not isinstance(other, LaurentSeries):
            scalar = _to_fraction(other)
            return LaurentSeries({m: scalar * c for m, c in self._terms.items()})
        out: dict[int, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                out[m1 + m2] = out.get(m1 + m2, Fraction(0)) + c1 * c2
        return LaurentSeries(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash(("LaurentSeries", tuple(self._terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{m}: {c}" for m, c in self._terms.items())
        return f"LaurentSeries({{{body}}})"


# ── Operations ───────────────────────────────────────────────────────


def derivative(p: RatPoly) -> RatPoly:
    """Return ``p'``; the degree drops by exactly one for nonconstant ``p``."""
    return RatPoly(j * c for j, c in enumerate(p.coeffs) if j > 0)


def reciprocal(a: RatPoly, p: int) -> RatPoly:
    """Return ``z**p * a(1/z)``: coefficient reversal inside a window of length ``p+1``.

    Raises
    ------
    InputError:
        If ``p`` is smaller than the degree of ``a``.
    """
    degree = a.degree
    if degree is None:
        if p < 0:
            raise InputError(f"Reciprocal window p={p} must be nonnegative", parameter="p")
        return RatPoly()
    if p < degree:
        raise InputError(
            f"Reciprocal window p={p} is smaller than degree {degree}", parameter="p"
        )
    return RatPoly(a.coefficient(p - j) for j in range(p + 1))


def mobius_transform(r: RatPoly) -> RatPoly:
    """Return ``(z+1)**m * r((z-1)/(z+1))`` with ``m = deg r``, expanded exactly.

    Roots map by ``ζ = (1+z)/(1-z)``; the leading coefficient of the result
    is ``r(1)``, so the degree drops exactly when ``r(1) = 0``.
    """
    m = r.degree
    if m is None:
        raise InputError("Cannot Möbius-transform the zero polynomial", parameter="r")
    minus = RatPoly([-1, 1])
    plus = RatPoly([1, 1])
    minus_powers = minus.powers(m + 1)
    plus_powers = plus.powers(m + 1)
    out = RatPoly()
    for j, c in enumerate(r.coeffs):
        if c != 0:
            out = out + minus_powers[j] * plus_powers[m - j] * c
    return out


def laurent_coeff(f: LaurentSeries, m: int) -> Fraction:
    """Coefficient of ``z**m``, i.e. ``res_{z=0} f(z) z**(-1-m)``."""
    return f.coefficient(m)


def substitute_inverse(p: RatPoly) -> LaurentSeries:
    """``p(1/z)`` as a Laurent series with exponents ``0, -1, ..., -deg p``."""
    return LaurentSeries({-j: c for j, c in enumerate(p.coeffs)})
