"""Truncated two-mode Fock lattice: vectors, sparse operators, ladder algebra.

Basis states are occupation pairs (na, nb) with both entries at most the
truncation bound N.  SparseOperator holds double-precision matrix elements
and acts strictly within the lattice: matrix elements that would leave it
are dropped at construction, which is the declared truncation semantics.
Exact verification takes a different route: ``apply_exact_ladder`` applies a
single ladder operator to exact amplitudes with no truncation at all, so
residuals on the boundary layers appear explicitly instead of vanishing
silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Tuple

from .radicals import RadicalSum

FockIndex = Tuple[int, int]

ExactAmplitudes = Dict[FockIndex, RadicalSum]


@dataclass(frozen=True)
class FockVector:
    """Sparse two-mode state.

    ``amplitudes`` are double precision.  When the state was constructed
    from exact inputs, ``exact`` holds the amplitudes as radical sums and
    the floats equal ``exact_prefactor`` times the rounded exact values;
    the prefactor carries transcendental normalization factors (such as a
    Gaussian envelope) that have no exact representation.
    """

    truncation: int
    amplitudes: Dict[FockIndex, complex]
    exact: Optional[ExactAmplitudes] = None
    exact_prefactor: float = 1.0

    def __post_init__(self):
        for na, nb in self.amplitudes:
            if na < 0 or nb < 0 or na > self.truncation or nb > self.truncation:
                raise ValueError(f"index ({na}, {nb}) outside truncation {self.truncation}")

    @classmethod
    def from_exact(
        cls, truncation: int, exact: ExactAmplitudes, prefactor: float = 1.0
    ) -> "FockVector":
        exact = {idx: amp for idx, amp in exact.items() if not amp.is_zero}
        floats = {idx: prefactor * amp.to_complex() for idx, amp in exact.items()}
        return cls(truncation, floats, exact=exact, exact_prefactor=prefactor)

    def amplitude(self, idx: FockIndex) -> complex:
        return self.amplitudes.get(idx, 0j)

    def support(self) -> List[FockIndex]:
        return sorted(self.amplitudes)

    def max_abs(self) -> float:
        return max((abs(v) for v in self.amplitudes.values()), default=0.0)

    def norm(self) -> float:
        return math.sqrt(sum(abs(v) ** 2 for v in self.amplitudes.values()))

    def inner(self, other: "FockVector") -> complex:
        """<self|other> over the shared support."""
        small, big = self.amplitudes, other.amplitudes
        if len(big) < len(small):
            return sum(big[idx].conjugate() * small[idx] for idx in big if idx in small).conjugate()
        return sum(small[idx].conjugate() * big[idx] for idx in small if idx in big)

    def with_amplitude(self, idx: FockIndex, value: complex) -> "FockVector":
        """Copy with one float amplitude replaced (exact data dropped)."""
        amps = dict(self.amplitudes)
        if value == 0:
            amps.pop(idx, None)
        else:
            amps[idx] = value
        return replace(self, amplitudes=amps, exact=None)


class SparseOperator:
    """Sparse matrix over Fock indices, entries keyed (row, col)."""

    __slots__ = ("truncation", "_entries")

    def __init__(self, truncation: int, entries: Dict[Tuple[FockIndex, FockIndex], complex]):
        self.truncation = truncation
        self._entries = {k: v for k, v in entries.items() if v != 0}

    def entry(self, row: FockIndex, col: FockIndex) -> complex:
        return self._entries.get((row, col), 0.0)

    def entries(self) -> Dict[Tuple[FockIndex, FockIndex], complex]:
        return dict(self._entries)

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def apply(self, vec: FockVector) -> FockVector:
        out: Dict[FockIndex, complex] = {}
        for (row, col), val in self._entries.items():
            a = vec.amplitudes.get(col)
            if a is None:
                continue
            out[row] = out.get(row, 0j) + val * a
        out = {idx: v for idx, v in out.items() if v != 0}
        return FockVector(self.truncation, out)

    def adjoint(self) -> "SparseOperator":
        ent = {(col, row): complex(v).conjugate() for (row, col), v in self._entries.items()}
        return SparseOperator(self.truncation, ent)

    def __matmul__(self, other: "SparseOperator") -> "SparseOperator":
        by_row: Dict[FockIndex, List[Tuple[FockIndex, complex]]] = {}
        for (row, col), v in other._entries.items():
            by_row.setdefault(row, []).append((col, v))
        out: Dict[Tuple[FockIndex, FockIndex], complex] = {}
        for (row, mid), va in self._entries.items():
            for col, vb in by_row.get(mid, ()):
                key = (row, col)
                out[key] = out.get(key, 0.0) + va * vb
        return SparseOperator(self.truncation, out)

    def __add__(self, other: "SparseOperator") -> "SparseOperator":
        out = dict(self._entries)
        for key, v in other._entries.items():
            out[key] = out.get(key, 0.0) + v
        return SparseOperator(self.truncation, out)

    def __sub__(self, other: "SparseOperator") -> "SparseOperator":
        out = dict(self._entries)
        for key, v in other._entries.items():
            out[key] = out.get(key, 0.0) - v
        return SparseOperator(self.truncation, out)

    def __rmul__(self, scalar) -> "SparseOperator":
        return SparseOperator(self.truncation, {k: scalar * v for k, v in self._entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return self.truncation == other.truncation and self._entries == other._entries


def lattice_indices(N: int) -> Iterable[FockIndex]:
    for na in range(N + 1):
        for nb in range(N + 1):
            yield (na, nb)


def build_ladder_ops(N: int) -> Dict[str, SparseOperator]:
    """Ladder, number-difference and pair operators on the (N+1)^2 lattice.

    a lowers mode a with amplitude sqrt(na); adjoints raise, and raising
    entries that would leave the lattice are dropped.  Q = a^dag a - b^dag b
    is diagonal with the charge na - nb.  K = a b - a^dag b^dag couples
    layers of equal charge only.
    """
    if N < 1:
        raise ValueError("truncation must be at least 1")
    a: Dict[Tuple[FockIndex, FockIndex], complex] = {}
    b: Dict[Tuple[FockIndex, FockIndex], complex] = {}
    q: Dict[Tuple[FockIndex, FockIndex], complex] = {}
    for na, nb in lattice_indices(N):
        if na > 0:
            a[((na - 1, nb), (na, nb))] = math.sqrt(na)
        if nb > 0:
            b[((na, nb - 1), (na, nb))] = math.sqrt(nb)
        if na != nb:
            q[((na, nb), (na, nb))] = float(na - nb)
    ops: Dict[str, SparseOperator] = {
        "a": SparseOperator(N, a),
        "b": SparseOperator(N, b),
        "Q": SparseOperator(N, q),
    }
    ops["a_dag"] = ops["a"].adjoint()
    ops["b_dag"] = ops["b"].adjoint()
    ops["K"] = ops["a"] @ ops["b"] - ops["a_dag"] @ ops["b_dag"]
    return ops


def commutator(A: SparseOperator, B: SparseOperator) -> SparseOperator:
    return A @ B - B @ A


# -- exact ladder action (no truncation) --------------------------------

_LADDER_RULES = {
    # op: (index shift, matrix-element radicand as a function of the source index)
    "a": ((-1, 0), lambda na, nb: na),
    "b": ((0, -1), lambda na, nb: nb),
    "a_dag": ((1, 0), lambda na, nb: na + 1),
    "b_dag": ((0, 1), lambda na, nb: nb + 1),
}


def apply_exact_ladder(amps: ExactAmplitudes, op: str) -> ExactAmplitudes:
    """Apply one ladder operator to exact amplitudes on the infinite lattice.

    No truncation: raising out of a finite support simply produces new
    indices, so boundary residuals of truncated states become visible.
    """
    shift, radicand = _LADDER_RULES[op]
    out: ExactAmplitudes = {}
    for (na, nb), amp in amps.items():
        r = radicand(na, nb)
        if r == 0:
            continue
        idx = (na + shift[0], nb + shift[1])
        moved = amp.times_sqrt(r)
        acc = out.get(idx)
        moved = moved + acc if acc is not None else moved
        if moved.is_zero:
            out.pop(idx, None)
        else:
            out[idx] = moved
    return out


def apply_exact_word(amps: ExactAmplitudes, word: Iterable[str]) -> ExactAmplitudes:
    """Apply a product of ladder operators, rightmost factor first."""
    for op in reversed(list(word)):
        amps = apply_exact_ladder(amps, op)
    return amps


def exact_combination(*terms: Tuple[object, ExactAmplitudes]) -> ExactAmplitudes:
    """Exact linear combination sum_i scale_i * amps_i over Fock indices."""
    out: ExactAmplitudes = {}
    for scale, amps in terms:
        for idx, amp in amps.items():
            scaled = amp.scaled(scale)
            acc = out.get(idx)
            scaled = scaled + acc if acc is not None else scaled
            if scaled.is_zero:
                out.pop(idx, None)
            else:
                out[idx] = scaled
    return out
