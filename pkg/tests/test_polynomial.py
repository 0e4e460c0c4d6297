"""Exact bivariate polynomial algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qk_eigenlab.polynomial import BivariatePolynomial
from qk_eigenlab.scalars import ComplexRational


def P(coeffs):
    return BivariatePolynomial({k: Fraction(v) for k, v in coeffs.items()})


def test_no_zero_coefficients_stored():
    p = P({(1, 0): 1, (0, 1): 0})
    assert p.coefficients() == {(1, 0): Fraction(1)}
    assert (p - p).is_zero


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        BivariatePolynomial({(-1, 0): Fraction(1)})


def test_arithmetic():
    x = BivariatePolynomial.slot1()
    y = BivariatePolynomial.slot2()
    p = (x + y) * (x - y)
    assert p == P({(2, 0): 1, (0, 2): -1})
    assert 2 * x == P({(1, 0): 2})
    assert (x * y).degree1 == 1 and (x * y * x).degree1 == 2


def test_derivative_and_swap():
    p = P({(2, 1): 3, (0, 2): 1})
    assert p.derivative(1) == P({(1, 1): 6})
    assert p.derivative(2) == P({(2, 0): 3, (0, 1): 2})
    assert p.swap_slots() == P({(1, 2): 3, (2, 0): 1})
    assert p.swap_slots().swap_slots() == p


def test_scale_slots_is_euler_operator():
    p = P({(2, 1): 1, (0, 0): 5})
    assert p.scale_slots() == P({(2, 1): 3})


def test_canonical_string():
    assert str(P({(1, 1): 1, (0, 0): -1})) == "x*y - 1"
    assert str(P({(2, 1): 1, (1, 0): -2})) == "x^2*y - 2*x"
    assert str(BivariatePolynomial.zero()) == "0"
    assert str(P({(0, 0): Fraction(-3, 4)})) == "-3/4"


def test_evaluate_slots_independently():
    p = P({(1, 1): 1, (0, 0): -1})
    z = ComplexRational.of(Fraction(1), Fraction(1))
    assert p.eval_conj(z) == ComplexRational.of(1, 0)
    assert p.evaluate(2, 3) == ComplexRational.of(5, 0)


small = st.integers(min_value=-4, max_value=4)
exps = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exps, small, max_size=4).map(
    lambda d: BivariatePolynomial({k: Fraction(v) for k, v in d.items()})
)
points = st.tuples(small, small).map(lambda t: ComplexRational.of(t[0], t[1]))


@settings(max_examples=60, deadline=None)
@given(polys, polys, points)
def test_evaluation_is_ring_homomorphism(p, q, z):
    w = z.conjugate()
    assert (p + q).evaluate(z, w) == p.evaluate(z, w) + q.evaluate(z, w)
    assert (p * q).evaluate(z, w) == p.evaluate(z, w) * q.evaluate(z, w)
