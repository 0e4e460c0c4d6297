"""Two-variable Hermite polynomials and their exact identities.

The polynomial family is

    H_{m,n}(x, y) = sum_{l=0}^{min(m,n)} m! n! / (l! (m-l)! (n-l)!) (-1)^l x^{m-l} y^{n-l}

stored in a fixed formal convention: slot 1 is the first argument, slot 2
the second.  The family is symmetric under swapping both indices and slots,
H_{m,n}(x, y) = H_{n,m}(y, x), and has generating function

    sum_{m,n} t^m t'^n / (m! n!) H_{m,n}(x, y) = exp(-t t' + t x + t' y).

Every identity in this module is checked as an exact polynomial equation
over the rationals; any index going negative denotes the zero polynomial,
which makes the three-term recurrences total.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Optional, Tuple

from .polynomial import BivariatePolynomial
from .report import BOUNDARY, FAIL, PASS, Report
from .scalars import ComplexRational


@lru_cache(maxsize=None)
def hermite2_poly(m: int, n: int) -> BivariatePolynomial:
    """Exact H_{m,n} as a polynomial in the two formal slots.

    Negative indices give the zero polynomial.
    """
    if m < 0 or n < 0:
        return BivariatePolynomial.zero()
    coeffs: Dict[Tuple[int, int], Fraction] = {}
    for l in range(min(m, n) + 1):
        c = factorial(m) * factorial(n) // (factorial(l) * factorial(m - l) * factorial(n - l))
        coeffs[(m - l, n - l)] = Fraction(-c if l % 2 else c)
    return BivariatePolynomial(coeffs)


def hermite2_eval(m: int, n: int, z) -> ComplexRational:
    """Exact H_{m,n}(z, conj(z)) for a ComplexRational z."""
    return hermite2_poly(m, n).eval_conj(z)


def generating_function_coeffs(M: int, N: int) -> Dict[Tuple[int, int], BivariatePolynomial]:
    """Coefficients of exp(-t t' + t x + t' y), scaled by m! n!.

    Expands the exponential as a truncated formal power series in (t, t')
    by summing powers of the argument, a route independent of the direct
    defining sum.  Entry (m, n) should equal hermite2_poly(m, n) for all
    m <= M, n <= N.
    """
    if M < 0 or N < 0:
        raise ValueError("orders must be nonnegative")

    Series = Dict[Tuple[int, int], BivariatePolynomial]
    one = BivariatePolynomial.constant(1)
    argument: Series = {
        (1, 1): BivariatePolynomial.constant(-1),
        (1, 0): BivariatePolynomial.slot1(),
        (0, 1): BivariatePolynomial.slot2(),
    }

    def series_mul(a: Series, b: Series) -> Series:
        out: Series = {}
        for (i, j), pa in a.items():
            for (u, v), pb in b.items():
                key = (i + u, j + v)
                if key[0] > M or key[1] > N:
                    continue
                prod = pa * pb
                out[key] = out[key] + prod if key in out else prod
        return {k: p for k, p in out.items() if not p.is_zero}

    total: Series = {(0, 0): one}
    power: Series = {(0, 0): one}
    for s in range(1, M + N + 1):
        power = series_mul(power, argument)
        if not power:
            break
        inv = Fraction(1, s)
        power = {k: p * inv for k, p in power.items()}
        for k, p in power.items():
            total[k] = total[k] + p if k in total else p

    table: Dict[Tuple[int, int], BivariatePolynomial] = {}
    for m in range(M + 1):
        for n in range(N + 1):
            p = total.get((m, n), BivariatePolynomial.zero())
            table[(m, n)] = p * (factorial(m) * factorial(n))
    return table


def symmetry_residual(m: int, n: int) -> BivariatePolynomial:
    """H_{m,n} with slots swapped minus H_{n,m}; zero if the symmetry holds."""
    return hermite2_poly(m, n).swap_slots() - hermite2_poly(n, m)


def check_recurrences(m: int, n: int) -> Report:
    """Verify the derivative rules, both three-term recurrences, and the
    modulus-product identity at indices (m, n) as exact polynomial equations.

    In the stored slot convention the identities read

        d/d(slot1) H_{m,n} = m H_{m-1,n}
        d/d(slot2) H_{m,n} = n H_{m,n-1}
        H_{m+1,n} + n H_{m,n-1} = x H_{m,n}
        H_{m,n+1} + m H_{m-1,n} = y H_{m,n}
        x y H_{m,n} = H_{m+1,n+1} + m n H_{m-1,n-1} + (m+n+1) H_{m,n}

    which are the swapped-argument forms of the usual statements via
    H_{m,n}(x, y) = H_{n,m}(y, x).
    """
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    X = BivariatePolynomial.slot1()
    Y = BivariatePolynomial.slot2()
    H = hermite2_poly

    residuals = {
        "derivative-slot1": H(m, n).derivative(1) - m * H(m - 1, n),
        "derivative-slot2": H(m, n).derivative(2) - n * H(m, n - 1),
        "raise-first-index": H(m + 1, n) + n * H(m, n - 1) - X * H(m, n),
        "raise-second-index": H(m, n + 1) + m * H(m - 1, n) - Y * H(m, n),
        "modulus-product": (
            H(m + 1, n + 1) + (m * n) * H(m - 1, n - 1) + (m + n + 1) * H(m, n) - X * Y * H(m, n)
        ),
    }

    report = Report(suite="hermite", case=f"m={m:02d} n={n:02d}")
    for identity, res in residuals.items():
        report.add(identity, PASS if res.is_zero else FAIL, "0/1" if res.is_zero else str(res))
    return report


def phase_factorization_check(n: int, q: int, z: Optional[ComplexRational] = None) -> Report:
    """Check that H_{n+q,n} factors into a pure charge-q phase times a radial part.

    Structurally: every stored monomial of hermite2_poly(n+q, n) has
    slot-1 exponent minus slot-2 exponent equal to q, so with slot 1 bound
    to conj(z) and slot 2 to z each monomial carries the same phase
    (conj(z)/|z|)^q.  When a nonzero sample z is supplied, the exact
    factorization H(conj z, z) = conj(z)^q * R(|z|^2) is also verified,
    where R collects the radial coefficients.
    """
    if n < 0 or q < 0:
        raise ValueError("indices must be nonnegative")
    poly = hermite2_poly(n + q, n)
    report = Report(suite="hermite", case=f"n={n:02d} q={q:02d}")

    offsets = {e1 - e2 for (e1, e2), _ in poly.monomials()}
    structural_ok = offsets <= {q}
    report.add(
        "phase-exponent-offset",
        PASS if structural_ok else FAIL,
        "0/1" if structural_ok else f"offsets={sorted(offsets)}",
    )

    if z is not None:
        if z.is_zero:
            raise ValueError("phase factorization sample must be nonzero")
        zc = z.conjugate()
        lhs = poly.evaluate(zc, z)
        r2 = z.abs2()
        radial = ComplexRational.of(0)
        for (_, e2), c in poly.monomials():
            radial = radial + ComplexRational.of(c) * ComplexRational.of(r2) ** e2
        rhs = zc**q * radial
        ok = lhs == rhs
        report.add(
            "phase-radial-split",
            PASS if ok else FAIL,
            "0/1" if ok else str(lhs - rhs),
        )
    return report
