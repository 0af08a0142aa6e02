from fractions import Fraction

import numpy as np
import pytest

from momentjac import RatPoly, moment_polynomial


@pytest.fixture
def quarter_quadratic() -> RatPoly:
    """z + z^2/4: interior, J = 3/2."""
    return moment_polynomial([1, Fraction(1, 4)])


@pytest.fixture
def unit_quadratic() -> RatPoly:
    """z + z^2: derivative root -1/2 inside the disk, J = -6."""
    return moment_polynomial([1, 1])


@pytest.fixture
def half_quadratic() -> RatPoly:
    """z + z^2/2: P'(-1) = 0."""
    return moment_polynomial([1, Fraction(1, 2)])


@pytest.fixture
def circle_cubic() -> RatPoly:
    """z + z^3/3: P' = 1 + z^2 has roots ±i on the circle."""
    return moment_polynomial([1, 0, Fraction(1, 3)])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(42)
