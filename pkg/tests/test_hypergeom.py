"""Pochhammer symbols, terminating 2F1 sums, and the contiguous relation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qk_eigenlab.hypergeom import (
    PoleError,
    gauss_contiguous_residual,
    hyp2f1_terminating,
    layer_hyp_factor,
    pochhammer,
)

F = Fraction


def test_pochhammer_values():
    assert pochhammer(F(5, 2), 0) == 1
    assert pochhammer(2, 3) == 24  # 2*3*4
    assert pochhammer(F(1, 2), 2) == F(3, 4)  # (1/2)(3/2)


def test_pochhammer_against_brute_force():
    for alpha in [F(-3, 2), F(0), F(7, 3), F(4)]:
        for n in range(8):
            prod = F(1)
            for j in range(n):
                prod *= alpha + j
            assert pochhammer(alpha, n) == prod


@settings(max_examples=50, deadline=None)
@given(
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
    st.integers(0, 6),
    st.integers(0, 6),
)
def test_pochhammer_splitting_law(alpha, m, n):
    assert pochhammer(alpha, m + n) == pochhammer(alpha, m) * pochhammer(alpha + m, n)


def test_hyp2f1_n0_is_one():
    assert hyp2f1_terminating(0, F(9, 7), F(-5, 3), F(2)) == 1


def test_hyp2f1_n1_closed_form():
    # two-term sum: 1 - (k+2)/(q+1) = (q-k-1)/(q+1)
    for q in range(5):
        for k in [F(-2), F(0), F(1), F(7, 3)]:
            got = hyp2f1_terminating(1, k / 2 + 1, F(q + 1), F(2))
            assert got == (F(q) - k - 1) / (q + 1)


def test_hyp2f1_zero_at_matching_parameters():
    # (q=2, k=1): the n=1 value vanishes since q - k - 1 = 0
    assert hyp2f1_terminating(1, F(3, 2), F(3), F(2)) == 0


def test_hyp2f1_matches_pochhammer_expansion():
    # term-by-term against the defining coefficients
    n, beta, gamma, z = 6, F(5, 4), F(7, 2), F(2)
    total = F(0)
    fact = 1
    for j in range(n + 1):
        if j:
            fact *= j
        total += pochhammer(F(-n), j) * pochhammer(beta, j) / pochhammer(gamma, j) * z**j / fact
    assert hyp2f1_terminating(n, beta, gamma, z) == total


def test_pole_error():
    with pytest.raises(PoleError):
        hyp2f1_terminating(3, F(1, 2), F(-1), F(2))
    with pytest.raises(PoleError):
        hyp2f1_terminating(1, F(1, 2), F(0), F(2))
    # gamma = -n is outside the sum range, no pole
    assert hyp2f1_terminating(1, F(1), F(-1), F(1)) == 2


def test_contiguous_residual_n0():
    for q in range(4):
        for k in [F(-1, 2), F(1), F(7, 3)]:
            assert gauss_contiguous_residual(0, k, q) == 0


def test_contiguous_residual_example():
    assert gauss_contiguous_residual(5, F(3), 2) == 0


def test_contiguous_residual_exhaustive_small():
    for q in range(6):
        for k in [F(-2), F(-1, 2), F(0), F(1), F(7, 3)]:
            for n in range(31):
                assert gauss_contiguous_residual(n, k, q) == 0


@settings(max_examples=80, deadline=None)
@given(
    st.integers(0, 20),
    st.fractions(min_value=-6, max_value=6, max_denominator=8),
    st.integers(0, 6),
)
def test_contiguous_residual_property(n, k, q):
    assert gauss_contiguous_residual(n, k, q) == 0


def test_layer_factor_matches_direct_sum():
    q, k = 3, F(1, 2)
    assert layer_hyp_factor(0, k, q) == 1
    assert layer_hyp_factor(1, k, q) == (F(q) - k - 1) / (q + 1)
    with pytest.raises(ValueError):
        layer_hyp_factor(0, k, -1)
