"""Exact Gaussian-plane integrals by reduction to monomial moments.

Every integral here has the form (1/pi) * int d^2z e^{-|z|^2} P(z, conj z)
and reduces termwise to the base moment

    (1/pi) int d^2z e^{-|z|^2} z^p conj(z)^p' = delta_{p,p'} * p!

(the angular integral kills p != p', the radial one is a factorial).  The
closed form is the main path; numerical quadrature appears only in the test
suite as an independent cross-check of this one formula.  Everything built
on top (orthogonality of the Hermite family, resolution of the identity,
state reconstruction, norm sums) is then exact rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, Tuple

from .fock import FockIndex
from .hermite import hermite2_poly
from .hypergeom import layer_hyp_factor
from .polynomial import BivariatePolynomial
from .report import FAIL, PASS, Report
from .scalars import format_rational
from .states import EigenstateParams


class InconsistencyError(ArithmeticError):
    """Two exact computation paths disagreed."""


def gaussian_moment(p: int, pstar: int) -> Fraction:
    """(1/pi) int d^2z e^{-|z|^2} z^p conj(z)^pstar = delta_{p,pstar} p!."""
    if p < 0 or pstar < 0:
        raise ValueError("moment exponents must be nonnegative")
    if p != pstar:
        return Fraction(0)
    return Fraction(factorial(p))


def integrate_polynomial(P: BivariatePolynomial, Q: BivariatePolynomial) -> Fraction:
    """Exact (1/pi) int d^2z e^{-|z|^2} P(z, conj z) * conj(Q(z, conj z)).

    Conjugating a real-coefficient polynomial swaps its slots, so the
    integrand is P * swap(Q) and the integral is the sum of moments over
    monomial pairs with matching total holomorphic and antiholomorphic
    degree.
    """
    total = Fraction(0)
    q_items = list(Q.swap_slots().monomials())
    for (a1, b1), ca in P.monomials():
        for (a2, b2), cb in q_items:
            if a1 + a2 == b1 + b2:
                total += ca * cb * factorial(a1 + a2)
    return total


def check_hermite_orthogonality(l: int, j: int, m: int, n: int) -> Report:
    """Exact check of the Gaussian orthogonality of the Hermite family:
    the (l,j) x (m,n) integral equals delta_{l,m} delta_{j,n} m! n!."""
    value = integrate_polynomial(hermite2_poly(l, j), hermite2_poly(m, n))
    expected = Fraction(factorial(m) * factorial(n)) if (l, j) == (m, n) else Fraction(0)
    report = Report(suite="orthogonality", case=f"l={l} j={j} m={m} n={n}")
    if value == expected:
        report.add("gaussian-orthogonality", PASS, "0/1", detail=f"value {format_rational(value)}")
    else:
        report.add(
            "gaussian-orthogonality",
            FAIL,
            format_rational(value - expected),
            detail=f"got {format_rational(value)}, expected {format_rational(expected)}",
        )
    return report


def check_completeness(N: int) -> Report:
    """Exact check that the entangled family resolves the identity.

    For basis pairs with occupations at most N, the Gaussian integral of
    <m,n|z><z|m',n'> must reproduce the identity matrix.  The Hermite
    normalization radicals cancel on the diagonal, so the whole matrix is
    exact: off-diagonal integrals are zero and diagonal ones equal m! n!.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    report = Report(suite="orthogonality", case=f"completeness N={N}")
    pairs = [(m, n) for m in range(N + 1) for n in range(N + 1)]
    bad: list[Tuple[Tuple[int, int], Tuple[int, int]]] = []
    for m, n in pairs:
        pmn = hermite2_poly(m, n)
        for mp, np_ in pairs:
            value = integrate_polynomial(pmn, hermite2_poly(mp, np_))
            expected = (
                Fraction(factorial(m) * factorial(n)) if (m, n) == (mp, np_) else Fraction(0)
            )
            if value != expected:
                bad.append(((m, n), (mp, np_)))
    if not bad:
        report.add(
            "resolution-of-identity",
            PASS,
            "0/1",
            detail=f"{len(pairs) ** 2} matrix elements equal the identity exactly",
        )
    else:
        report.add(
            "resolution-of-identity",
            FAIL,
            f"{len(bad)} elements",
            detail=f"first mismatch at {bad[0]}",
        )
    return report


def reconstruct_qk(params: EigenstateParams) -> Report:
    """Rebuild the (q, k) eigenstate from its overlap with the entangled family.

    The integral transform sends the overlap series back to Fock
    coefficients; computed termwise with the moment oracle it must equal
    the direct layer coefficients exactly.  Working with amplitudes scaled
    by sqrt(l! j!) removes every radical: the integral-path coefficient on
    (l, j) must equal F(n) (n+q)! when (l, j) = (n+q, n) and zero elsewhere.
    """
    q, k, N = params.q, params.k, params.truncation
    factors = {n: layer_hyp_factor(n, k, q) for n in params.layers()}
    report = Report(suite="reconstruction", case=params.label())
    first_bad = None
    for l in range(N + 1):
        for j in range(N + 1):
            plj = hermite2_poly(l, j)
            scaled = Fraction(0)
            for n, F in factors.items():
                if F:
                    scaled += (
                        Fraction(F, factorial(n))
                        * integrate_polynomial(plj, hermite2_poly(n + q, n))
                    )
            if l - j == q and j <= params.n_max:
                expected = factors[j] * factorial(j + q)
            else:
                expected = Fraction(0)
            if scaled != expected and first_bad is None:
                first_bad = ((l, j), scaled, expected)
    if first_bad is None:
        report.add("state-reconstruction", PASS, "0/1")
    else:
        (l, j), got, want = first_bad
        report.add(
            "state-reconstruction",
            FAIL,
            format_rational(got - want),
            detail=f"layer ({l},{j}): integral path {format_rational(got)}, direct {format_rational(want)}",
        )
    return report


def norm_partial_sum(q: int, k: Fraction | int, n_top: int) -> Fraction:
    """Direct truncated norm series sum_{n<=n_top} (n+q)!/n! F(n)^2."""
    total = Fraction(0)
    for n in range(n_top + 1):
        F = layer_hyp_factor(n, k, q)
        total += Fraction(factorial(n + q), factorial(n)) * F * F
    return total


def norm_integral(params: EigenstateParams, n_top: int) -> Fraction:
    """Truncated squared norm via the Gaussian integral of |overlap|^2.

    Expands both overlap factors to layer n_top and integrates the double
    series termwise with the moment oracle; orthogonality emerges instead
    of being assumed.  The result is asserted equal to the direct sum
    (``norm_partial_sum``) before it is returned.
    """
    q, k = params.q, params.k
    factors = {n: layer_hyp_factor(n, k, q) for n in range(n_top + 1)}
    total = Fraction(0)
    for n, Fn in factors.items():
        if not Fn:
            continue
        pn = hermite2_poly(n + q, n)
        for m, Fm in factors.items():
            if not Fm:
                continue
            total += (
                Fraction(Fn * Fm, factorial(n) * factorial(m))
                * integrate_polynomial(pn, hermite2_poly(m + q, m))
            )
    direct = norm_partial_sum(q, k, n_top)
    if total != direct:
        raise InconsistencyError(
            f"norm paths disagree at q={q} k={k} n_top={n_top}: "
            f"{format_rational(total)} vs {format_rational(direct)}"
        )
    return total
