"""Sparse bivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent pairs (e1, e2) to Fraction, one entry
per monomial of the two formal slots.  Zero coefficients are never stored,
so dict equality is polynomial equality and ``is_zero`` is ``not coeffs``.
The two slots are purely formal; callers decide what they stand for (the
library uses slot 1 for a complex variable and slot 2 for its conjugate).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterator, Tuple

from .scalars import ComplexRational, CR_ONE

Exponents = Tuple[int, int]


class BivariatePolynomial:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Dict[Exponents, Fraction] | None = None):
        clean: Dict[Exponents, Fraction] = {}
        for (e1, e2), c in (coeffs or {}).items():
            if e1 < 0 or e2 < 0:
                raise ValueError(f"negative exponent in monomial ({e1}, {e2})")
            c = Fraction(c)
            if c != 0:
                clean[(int(e1), int(e2))] = c
        self._coeffs = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    @classmethod
    def constant(cls, value) -> "BivariatePolynomial":
        return cls({(0, 0): Fraction(value)})

    @classmethod
    def slot1(cls) -> "BivariatePolynomial":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def slot2(cls) -> "BivariatePolynomial":
        return cls({(0, 1): Fraction(1)})

    # -- views ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficients(self) -> Dict[Exponents, Fraction]:
        return dict(self._coeffs)

    def coefficient(self, e1: int, e2: int) -> Fraction:
        return self._coeffs.get((e1, e2), Fraction(0))

    def monomials(self) -> Iterator[Tuple[Exponents, Fraction]]:
        """Monomials in canonical order: total degree, then slot-1 degree, descending."""
        for key in sorted(self._coeffs, key=lambda e: (-(e[0] + e[1]), -e[0])):
            yield key, self._coeffs[key]

    @property
    def degree1(self) -> int:
        return max((e1 for e1, _ in self._coeffs), default=0)

    @property
    def degree2(self) -> int:
        return max((e2 for _, e2 in self._coeffs), default=0)

    def __len__(self) -> int:
        return len(self._coeffs)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        p = BivariatePolynomial.__new__(BivariatePolynomial)
        p._coeffs = out
        return p

    def __sub__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        p = BivariatePolynomial.__new__(BivariatePolynomial)
        p._coeffs = {k: -c for k, c in self._coeffs.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if f == 0:
                return BivariatePolynomial.zero()
            p = BivariatePolynomial.__new__(BivariatePolynomial)
            p._coeffs = {k: c * f for k, c in self._coeffs.items()}
            return p
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        out: Dict[Exponents, Fraction] = {}
        for (a1, a2), ca in self._coeffs.items():
            for (b1, b2), cb in other._coeffs.items():
                key = (a1 + b1, a2 + b2)
                s = out.get(key, Fraction(0)) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        p = BivariatePolynomial.__new__(BivariatePolynomial)
        p._coeffs = out
        return p

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    # -- structure -----------------------------------------------------

    def derivative(self, slot: int) -> "BivariatePolynomial":
        """Formal partial derivative with respect to slot 1 or slot 2."""
        if slot not in (1, 2):
            raise ValueError("slot must be 1 or 2")
        out: Dict[Exponents, Fraction] = {}
        for (e1, e2), c in self._coeffs.items():
            if slot == 1 and e1 > 0:
                out[(e1 - 1, e2)] = c * e1
            elif slot == 2 and e2 > 0:
                out[(e1, e2 - 1)] = c * e2
        return BivariatePolynomial(out)

    def swap_slots(self) -> "BivariatePolynomial":
        """Exchange the two formal slots (exponent pairs transposed)."""
        p = BivariatePolynomial.__new__(BivariatePolynomial)
        p._coeffs = {(e2, e1): c for (e1, e2), c in self._coeffs.items()}
        return p

    def scale_slots(self) -> "BivariatePolynomial":
        """Euler operator: each monomial scaled by its total degree."""
        out = {k: c * (k[0] + k[1]) for k, c in self._coeffs.items() if k[0] + k[1]}
        return BivariatePolynomial(out)

    # -- evaluation ----------------------------------------------------

    def evaluate(self, z1, z2) -> ComplexRational:
        """Exact evaluation with independent values for the two slots."""
        z1 = z1 if isinstance(z1, ComplexRational) else ComplexRational.of(z1)
        z2 = z2 if isinstance(z2, ComplexRational) else ComplexRational.of(z2)
        total = ComplexRational.of(0)
        pow1: dict[int, ComplexRational] = {0: CR_ONE}
        pow2: dict[int, ComplexRational] = {0: CR_ONE}

        def power(cache, base, e):
            if e not in cache:
                cache[e] = power(cache, base, e - 1) * base
            return cache[e]

        for (e1, e2), c in self._coeffs.items():
            total = total + power(pow1, z1, e1) * power(pow2, z2, e2) * c
        return total

    def eval_conj(self, z) -> ComplexRational:
        """Evaluate with slot 1 = z and slot 2 = conj(z)."""
        z = z if isinstance(z, ComplexRational) else ComplexRational.of(z)
        return self.evaluate(z, z.conjugate())

    # -- formatting ------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for (e1, e2), c in self.monomials():
            factors = []
            if e1:
                factors.append("x" if e1 == 1 else f"x^{e1}")
            if e2:
                factors.append("y" if e2 == 1 else f"y^{e2}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self._coeffs!r})"
