"""Exact rational and complex-rational scalars.

All identity checking in this package runs on exact arithmetic.  Real
scalars are plain ``fractions.Fraction``; this module adds the strict
"num/den" wire format used by the CLI and ``ComplexRational``, an immutable
complex number whose real and imaginary parts are Fractions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction

# Scalar values accepted wherever an exact scalar is expected.
ExactScalar = Union[int, Fraction, "ComplexRational"]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class ParseError(ValueError):
    """A rational or complex literal could not be parsed."""


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" into an exact Fraction.

    Decimals, exponents and doubled slashes are rejected: the wire format is
    integers only, so exactness survives a round trip.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ParseError(f"not a rational literal: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator: {text!r}") from None


def format_rational(x: Fraction) -> str:
    """Canonical "num/den" form (denominator always present)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ComplexRational:
    """Complex number with exact Fraction components."""

    re: Fraction
    im: Fraction

    @classmethod
    def of(cls, re: int | Fraction | str = 0, im: int | Fraction | str = 0) -> "ComplexRational":
        def coerce(v):
            if isinstance(v, str):
                return parse_rational(v)
            return Fraction(v)

        return cls(coerce(re), coerce(im))

    @classmethod
    def parse(cls, text: str) -> "ComplexRational":
        """Parse "re,im" with both parts in the rational wire format."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ParseError(f"expected 're,im': {text!r}")
        return cls(parse_rational(parts[0]), parse_rational(parts[1]))

    def _coerce(self, other) -> "ComplexRational | None":
        if isinstance(other, ComplexRational):
            return other
        if isinstance(other, (int, Fraction)):
            return ComplexRational(Fraction(other), Fraction(0))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            d = Fraction(other)
            return ComplexRational(self.re / d, self.im / d)
        return NotImplemented

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = ComplexRational(Fraction(1), Fraction(0))
        base = self
        e = n
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Exact squared modulus re**2 + im**2."""
        return self.re * self.re + self.im * self.im

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    __complex__ = to_complex

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{self.im}*i"
        if self.re == 0:
            return imag
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        itxt = "i" if mag == 1 else f"{mag}*i"
        return f"{self.re} {sign} {itxt}"


CR_ZERO = ComplexRational(Fraction(0), Fraction(0))
CR_ONE = ComplexRational(Fraction(1), Fraction(0))
