"""Exact scalars of the form  sum_d c_d * sqrt(d)  with rational-complex c_d.

Fock amplitudes carry square roots of factorial ratios, so exact residual
checks need a scalar type closed under addition and under multiplication by
sqrt(integer).  Radicands are kept squarefree; two terms combine exactly
when their squarefree parts match, which is guaranteed for every linear
relation this package verifies.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Dict, Tuple

from .scalars import ComplexRational


def _small_primes(limit: int) -> Tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return tuple(i for i, f in enumerate(sieve) if f)


_PRIMES = _small_primes(1000)


def split_square(m: int) -> Tuple[int, int]:
    """Write m = s**2 * d with d squarefree; returns (s, d).

    Factors by trial division over primes below 1000, which covers every
    radicand this package produces (factorial products and ladder matrix
    elements); a perfect-square check mops up any large cofactor.
    """
    if m <= 0:
        raise ValueError("radicand must be positive")
    s, d = 1, 1
    rest = m
    for p in _PRIMES:
        if p * p > rest:
            break
        if rest % p:
            continue
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    if rest > 1:
        r = isqrt(rest)
        if r * r == rest:
            s *= r
        else:
            d *= rest
    return s, d


class RadicalSum:
    """Finite sum of ComplexRational coefficients times square roots."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[int, ComplexRational] | None = None):
        clean: Dict[int, ComplexRational] = {}
        for d, c in (terms or {}).items():
            if c.is_zero:
                continue
            s, d0 = split_square(d)
            c0 = c * s if s != 1 else c
            acc = clean.get(d0)
            c0 = c0 + acc if acc is not None else c0
            if c0.is_zero:
                clean.pop(d0, None)
            else:
                clean[d0] = c0
        self._terms = clean

    @classmethod
    def zero(cls) -> "RadicalSum":
        return cls()

    @classmethod
    def of(cls, coeff, radicand: int = 1) -> "RadicalSum":
        if not isinstance(coeff, ComplexRational):
            coeff = ComplexRational.of(Fraction(coeff))
        return cls({radicand: coeff})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Dict[int, ComplexRational]:
        return dict(self._terms)

    def __add__(self, other):
        if not isinstance(other, RadicalSum):
            return NotImplemented
        out = dict(self._terms)
        for d, c in other._terms.items():
            s = out.get(d)
            s = c if s is None else s + c
            if s.is_zero:
                out.pop(d, None)
            else:
                out[d] = s
        r = RadicalSum.__new__(RadicalSum)
        r._terms = out
        return r

    def __sub__(self, other):
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        r = RadicalSum.__new__(RadicalSum)
        r._terms = {d: -c for d, c in self._terms.items()}
        return r

    def scaled(self, factor) -> "RadicalSum":
        """Multiply by an exact scalar (int, Fraction, or ComplexRational)."""
        if not isinstance(factor, ComplexRational):
            factor = ComplexRational.of(Fraction(factor))
        if factor.is_zero:
            return RadicalSum.zero()
        r = RadicalSum.__new__(RadicalSum)
        r._terms = {d: c * factor for d, c in self._terms.items()}
        return r

    def times_sqrt(self, k: int) -> "RadicalSum":
        """Multiply by sqrt(k) for a nonnegative integer k."""
        if k < 0:
            raise ValueError("radicand must be nonnegative")
        if k == 0:
            return RadicalSum.zero()
        out: Dict[int, ComplexRational] = {}
        for d, c in self._terms.items():
            s, d2 = split_square(d * k)
            c2 = c * s
            acc = out.get(d2)
            c2 = c2 + acc if acc is not None else c2
            if c2.is_zero:
                out.pop(d2, None)
            else:
                out[d2] = c2
        r = RadicalSum.__new__(RadicalSum)
        r._terms = out
        return r

    def conjugate(self) -> "RadicalSum":
        r = RadicalSum.__new__(RadicalSum)
        r._terms = {d: c.conjugate() for d, c in self._terms.items()}
        return r

    def __eq__(self, other) -> bool:
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def to_complex(self) -> complex:
        total = 0j
        for d, c in self._terms.items():
            total += c.to_complex() * (d**0.5)
        return total

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        chunks = []
        for d in sorted(self._terms):
            c = self._terms[d]
            chunks.append(f"({c})" if d == 1 else f"({c})*sqrt({d})")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"RadicalSum({self._terms!r})"
