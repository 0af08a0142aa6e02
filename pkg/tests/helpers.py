"""Random rational polynomials for the identity sweeps."""
from fractions import Fraction

import numpy as np

from momentjac import RatPoly


def random_rational(rng: np.random.Generator, bound: int = 10, max_den: int = 16) -> Fraction:
    q = int(rng.integers(1, max_den + 1))
    return Fraction(int(rng.integers(-bound * q, bound * q + 1)), q)


def random_poly(rng: np.random.Generator, degree: int, *, constant: bool = True) -> RatPoly:
    """Random rational polynomial of exact ``degree``; zero constant term unless ``constant``."""
    coeffs = [random_rational(rng) if constant else Fraction(0)]
    coeffs += [random_rational(rng) for _ in range(degree)]
    while coeffs[degree] == 0:
        coeffs[degree] = random_rational(rng)
    return RatPoly(coeffs)


def poly_from_roots(
    real_roots: list[Fraction], pairs: list[tuple[Fraction, Fraction]]
) -> RatPoly:
    """Monic polynomial with the given real roots and conjugate pairs ``re ± i im``."""
    out = RatPoly.constant(1)
    for r in real_roots:
        out = out * RatPoly([-r, 1])
    for re, im in pairs:
        out = out * RatPoly([re * re + im * im, -2 * re, 1])
    return out


def random_rooted_poly(
    rng: np.random.Generator, degree: int, low: float, high: float, *, sign: int = 1
) -> RatPoly:
    """Polynomial whose roots have ``|Re|`` and ``|Im|`` in ``[low, high]``.

    Real roots and the real parts of conjugate pairs carry ``sign``. Moduli
    therefore lie in ``[low, high * sqrt(2)]``. Roots are distinct rationals
    with denominator 8, so everything stays exact and every root is simple.
    """

    def draw() -> Fraction:
        return Fraction(int(rng.integers(int(low * 8), int(high * 8) + 1)), 8)

    pairs: list[tuple[Fraction, Fraction]] = []
    reals: list[Fraction] = []
    remaining = degree
    while remaining:
        if remaining >= 2 and rng.random() < 0.5:
            pair = (sign * draw(), draw())
            if pair not in pairs:
                pairs.append(pair)
                remaining -= 2
        else:
            root = sign * draw()
            if root not in reals:
                reals.append(root)
                remaining -= 1
    return poly_from_roots(reals, pairs)
