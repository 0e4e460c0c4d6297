"""Terminating Gauss hypergeometric sums in exact arithmetic.

With a nonpositive-integer first parameter the hypergeometric series
2F1(-n, b; c; z) terminates after n + 1 terms, so it is an exact rational
number for rational inputs even far outside |z| < 1, where the infinite
series would diverge.  Everything here is a finite sum; no numerics, no
convergence questions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class PoleError(ArithmeticError):
    """The lower parameter hits a nonpositive integer inside the sum range."""


def pochhammer(alpha: Fraction | int, n: int) -> Fraction:
    """Rising factorial alpha * (alpha+1) * ... * (alpha+n-1); empty product is 1."""
    if n < 0:
        raise ValueError("pochhammer order must be nonnegative")
    alpha = Fraction(alpha)
    out = Fraction(1)
    for j in range(n):
        out *= alpha + j
    return out


@lru_cache(maxsize=None)
def hyp2f1_terminating(n: int, beta: Fraction, gamma: Fraction, z: Fraction) -> Fraction:
    """Exact value of 2F1(-n, beta; gamma; z) for integer n >= 0.

    Evaluates sum_{j=0}^{n} (-n)_j (beta)_j / (gamma)_j * z^j / j! with an
    incremental term update.  Raises PoleError when gamma is one of
    0, -1, ..., -(n-1): the denominator Pochhammer vanishes inside the sum.
    """
    if n < 0:
        raise ValueError("series order must be nonnegative")
    beta, gamma, z = Fraction(beta), Fraction(gamma), Fraction(z)
    if gamma.denominator == 1 and -(n - 1) <= gamma <= 0:
        raise PoleError(f"gamma={gamma} is a nonpositive integer within the sum range")
    total = Fraction(1)
    term = Fraction(1)
    for j in range(n):
        term *= Fraction((j - n)) * (beta + j) / ((gamma + j) * (j + 1)) * z
        total += term
    return total


def layer_hyp_factor(n: int, k: Fraction | int, q: int) -> Fraction:
    """The hypergeometric factor attached to layer n of the (q, k) eigenstate.

    F(n) = 2F1(-n, k/2 + 1; q + 1; 2); q must be a nonnegative integer so
    the lower parameter never hits a pole.
    """
    if q < 0:
        raise ValueError("charge q must be nonnegative")
    return hyp2f1_terminating(n, Fraction(k) / 2 + 1, Fraction(q + 1), Fraction(2))


def gauss_contiguous_residual(n: int, k: Fraction | int, q: int) -> Fraction:
    """Exact residual of the three-term relation behind the eigenstate identity.

    Returns (q - k - 1) F(n) + n F(n-1) - (q + n + 1) F(n+1) with
    F(m) = layer_hyp_factor(m, k, q).  The relation is a specialization of
    the Gauss contiguous relation shifting the terminating parameter, so an
    exact zero is the expected value for every n >= 0.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    k = Fraction(k)
    residual = (q - k - 1) * layer_hyp_factor(n, k, q)
    if n > 0:
        residual += n * layer_hyp_factor(n - 1, k, q)
    residual -= (q + n + 1) * layer_hyp_factor(n + 1, k, q)
    return residual
