"""Tests for momentjac._roots — Aberth-Ehrlich roots and their certification."""
from fractions import Fraction

import pytest

import momentjac._roots as roots_module
import momentjac._univalence as univalence
from momentjac import InputError, RatPoly, find_roots
from momentjac._roots import discriminant_float, is_on_circle
from tests.helpers import random_poly, random_rooted_poly


def test_find_roots_is_exported_from_its_own_module():
    assert find_roots is roots_module.find_roots
    assert "find_roots" not in getattr(univalence, "__all__", ())


def test_linear_root_is_exact():
    roots = find_roots(RatPoly([2, 4]))
    assert roots.roots == (-0.5 + 0j,)
    assert roots.margin == pytest.approx(0.5)
    assert roots.trusted


def test_real_cubic():
    roots = find_roots(RatPoly([-6, 11, -6, 1]))  # (z-1)(z-2)(z-3)
    assert [r.real for r in roots] == pytest.approx([1, 2, 3])
    assert all(r.imag == 0 for r in roots)
    assert roots.margin == pytest.approx(0, abs=1e-12)


def test_imaginary_pair():
    roots = find_roots(RatPoly([4, 0, 1]))
    assert sorted(r.imag for r in roots) == pytest.approx([-2, 2])
    assert roots.margin == pytest.approx(1)


def test_constants_rejected():
    with pytest.raises(InputError):
        find_roots(RatPoly.constant(3))
    with pytest.raises(InputError):
        find_roots(RatPoly())


def test_double_root_is_untrusted():
    roots = find_roots(RatPoly([1, -2, 1]))
    assert not roots.trusted
    assert [r.real for r in roots] == pytest.approx([1, 1], abs=1e-6)


@pytest.mark.parametrize("degree", range(2, 11))
def test_roots_certify_and_pair(rng, degree):
    for _ in range(10):
        roots = find_roots(random_poly(rng, degree))
        assert len(roots) == degree
        assert roots.residual_bound <= 1e-11
        assert set(roots) == {r.conjugate() for r in roots}


@pytest.mark.parametrize("degree", range(1, 8))
def test_roots_of_known_polynomials(rng, degree):
    P = random_rooted_poly(rng, degree, 1.25, 3.0)
    roots = find_roots(P)
    assert min(abs(r) for r in roots) > 1
    assert roots.margin > 0.2
    for r in roots:
        assert abs(P.evaluate_complex(r)) <= 1e-8 * max(1.0, abs(r) ** degree)


def test_discriminant_float():
    p = RatPoly([-1, 0, 1])
    assert discriminant_float(p, find_roots(p)) == pytest.approx(4)
    q = RatPoly([Fraction(1, 4), 1, 1])  # (z + 1/2)^2
    assert discriminant_float(q, find_roots(q)) < 1e-12


def test_is_on_circle():
    assert is_on_circle(1j, 1e-9)
    assert is_on_circle(complex(0.6, 0.8), 1e-9)
    assert not is_on_circle(1.01, 1e-3)
