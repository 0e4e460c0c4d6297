"""Radical-sum scalars: sqrt extraction and exact cancellation."""

from fractions import Fraction
from math import factorial, isqrt

import pytest

from qk_eigenlab.radicals import RadicalSum, split_square
from qk_eigenlab.scalars import ComplexRational

F = Fraction


def test_split_square_small():
    assert split_square(1) == (1, 1)
    assert split_square(4) == (2, 1)
    assert split_square(12) == (2, 3)
    assert split_square(360) == (6, 10)
    with pytest.raises(ValueError):
        split_square(0)


def test_split_square_factorials():
    for n in range(2, 22):
        s, d = split_square(factorial(n))
        assert s * s * d == factorial(n)
        # d squarefree: no prime square divides it
        for p in range(2, isqrt(d) + 1):
            assert d % (p * p) != 0


def test_radical_normalization():
    # sqrt(8) = 2 sqrt(2)
    a = RadicalSum.of(F(1), 8)
    b = RadicalSum.of(F(2), 2)
    assert a == b
    assert a - b == RadicalSum.zero()


def test_radical_addition_cancels():
    x = RadicalSum.of(F(3, 2), 5)
    y = RadicalSum.of(F(-3, 2), 5)
    assert (x + y).is_zero
    mixed = RadicalSum.of(F(1), 2) + RadicalSum.of(F(1), 3)
    assert not mixed.is_zero
    assert len(mixed.terms()) == 2


def test_times_sqrt():
    # sqrt(2) * sqrt(2) = 2
    x = RadicalSum.of(F(1), 2).times_sqrt(2)
    assert x == RadicalSum.of(F(2), 1)
    # sqrt(6) * sqrt(10) = 2 sqrt(15)
    y = RadicalSum.of(F(1), 6).times_sqrt(10)
    assert y == RadicalSum.of(F(2), 15)
    assert RadicalSum.of(F(5), 7).times_sqrt(0).is_zero


def test_scaled_by_complex():
    i = ComplexRational.of(0, 1)
    x = RadicalSum.of(F(2), 3).scaled(i)
    assert x.terms()[3] == ComplexRational.of(0, 2)
    assert x.scaled(0).is_zero


def test_to_complex():
    x = RadicalSum.of(F(1), 2) + RadicalSum.of(F(-1), 1)
    assert abs(x.to_complex() - (2**0.5 - 1)) < 1e-15
