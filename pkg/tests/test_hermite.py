"""The two-variable Hermite family: values, generating function, recurrences."""

from fractions import Fraction
from math import factorial

from hypothesis import given, settings
from hypothesis import strategies as st

from qk_eigenlab.hermite import (
    check_recurrences,
    generating_function_coeffs,
    hermite2_eval,
    hermite2_poly,
    phase_factorization_check,
    symmetry_residual,
)
from qk_eigenlab.polynomial import BivariatePolynomial
from qk_eigenlab.scalars import ComplexRational

F = Fraction


def test_base_cases():
    assert hermite2_poly(0, 0) == BivariatePolynomial.constant(1)
    assert hermite2_poly(1, 1) == BivariatePolynomial({(1, 1): F(1), (0, 0): F(-1)})
    assert hermite2_poly(2, 1) == BivariatePolynomial({(2, 1): F(1), (1, 0): F(-2)})
    assert hermite2_poly(-1, 3).is_zero
    assert hermite2_poly(3, -1).is_zero


def test_defining_sum_brute_force():
    # recompute a midsize case straight from the definition
    m, n = 4, 3
    expected = {}
    for l in range(min(m, n) + 1):
        c = F(factorial(m) * factorial(n), factorial(l) * factorial(m - l) * factorial(n - l))
        expected[(m - l, n - l)] = -c if l % 2 else c
    assert hermite2_poly(m, n) == BivariatePolynomial(expected)


def test_degree_bounds():
    p = hermite2_poly(5, 3)
    assert p.degree1 == 5 and p.degree2 == 3


def test_eval_examples():
    z = ComplexRational.of(1, 1)
    assert hermite2_eval(1, 1, z) == ComplexRational.of(1, 0)  # |z|^2 - 1
    assert hermite2_eval(1, 1, ComplexRational.of(0, 0)) == ComplexRational.of(-1, 0)
    for m in range(4):
        zz = ComplexRational.of(F(2, 3), F(-1, 5))
        assert hermite2_eval(m, 0, zz) == zz**m


def test_diagonal_at_origin():
    # H_{l,l}(0,0) = (-1)^l l!; off-diagonal vanish
    origin = ComplexRational.of(0, 0)
    for l in range(6):
        val = hermite2_eval(l, l, origin)
        assert val == ComplexRational.of((-1) ** l * factorial(l), 0)
        if l:
            assert hermite2_eval(l, 0, origin).is_zero or l == 0
            assert hermite2_eval(l + 1, l, origin).is_zero


def test_generating_function_matches_direct_sum():
    table = generating_function_coeffs(6, 6)
    assert table[(0, 0)] == BivariatePolynomial.constant(1)
    assert table[(1, 1)] == hermite2_poly(1, 1)
    for m in range(7):
        for n in range(7):
            assert table[(m, n)] == hermite2_poly(m, n), (m, n)


def test_symmetry():
    for m in range(11):
        for n in range(11):
            assert symmetry_residual(m, n).is_zero


def test_recurrences_examples():
    # (0,0): raising the first index reduces to H_{1,0} = x * H_{0,0}
    rep = check_recurrences(0, 0)
    assert rep.passed and rep.status == "pass"
    # (1,1): the modulus identity x y H_{1,1} = H_{2,2} + H_{0,0} + 3 H_{1,1}
    lhs = BivariatePolynomial({(1, 1): F(1)}) * hermite2_poly(1, 1)
    rhs = hermite2_poly(2, 2) + hermite2_poly(0, 0) + 3 * hermite2_poly(1, 1)
    assert lhs == rhs
    assert check_recurrences(1, 1).passed


def test_recurrences_exhaustive():
    for m in range(11):
        for n in range(11):
            rep = check_recurrences(m, n)
            assert rep.passed, (m, n, [e for e in rep.entries if e.status != "pass"])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 12), st.integers(0, 12))
def test_recurrences_property(m, n):
    assert check_recurrences(m, n).passed


def test_phase_factorization_structural():
    # H_{2,0} = x^2: offset 2 everywhere
    rep = phase_factorization_check(0, 2)
    assert rep.passed
    # H_{2,1} = x^2 y - 2x: offsets 1 and 1
    rep = phase_factorization_check(1, 1)
    assert rep.passed
    for n in range(9):
        for q in range(7):
            assert phase_factorization_check(n, q).passed


def test_phase_factorization_exact_value():
    z = ComplexRational.of(F(3, 5), F(4, 5))  # unit modulus
    for n in range(5):
        for q in range(5):
            assert phase_factorization_check(n, q, z).passed
    # generic non-unit sample
    w = ComplexRational.of(F(1, 2), F(-2, 3))
    assert phase_factorization_check(3, 2, w).passed
