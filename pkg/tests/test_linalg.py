"""Tests for momentjac._linalg — fraction-free determinants."""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from momentjac import bareiss_det
from momentjac._linalg import leading_minor


def test_empty_matrix_has_determinant_one():
    assert bareiss_det([]) == 1


def test_small_determinants():
    assert bareiss_det([[2, Fraction(1, 2)], [1, 1]]) == Fraction(3, 2)
    assert bareiss_det([[2, 2], [4, 1]]) == -6
    assert bareiss_det([[5]]) == 5


def test_zero_pivot_swaps_rows():
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1


def test_singular_matrix():
    assert bareiss_det([[1, 2, 3], [2, 4, 6], [0, 1, 1]]) == 0
    assert bareiss_det([[0, 1], [0, 2]]) == 0


def test_leading_minor():
    m = [[3, 0, 9], [1, 2, 9], [9, 9, 9]]
    assert leading_minor(m, 0) == 1
    assert leading_minor(m, 1) == 3
    assert leading_minor(m, 2) == 6


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n
        )
    )
)
def test_bareiss_matches_float_determinant(rows):
    exact = bareiss_det(rows)
    approx = float(np.linalg.det(np.array(rows, dtype=float)))
    assert exact.denominator == 1
    assert abs(float(exact) - approx) <= 1e-6 * max(1.0, abs(approx))
