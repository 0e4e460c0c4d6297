"""State constructors on the truncated two-mode lattice.

Three families, all left unnormalized (overall constants are fixed to 1;
every verification below is a homogeneous linear relation, so
normalization never enters):

* ``pair_coherent_state(q, alpha, N)``: support on the charge-q line with
  amplitudes alpha^n / sqrt((n+q)! n!) on (n+q, n).
* ``entangled_state_vector(xi, N)``: the joint eigenvector family of
  (a + b^dag) and (a^dag + b), with amplitudes
  exp(-|xi|^2/2) H_{l,j}(xi, conj xi) / sqrt(l! j!).
* ``eigen_state_qk(params)``: the charge-q eigenvector of K = ab - a^dag b^dag
  with eigenvalue q - k - 1, layer amplitudes
  sqrt((n+q)!/n!) * 2F1(-n, k/2+1; q+1; 2).

Exact amplitudes (radical sums) are attached whenever the defining data is
exact; the Gaussian envelope of the entangled family is transcendental and
is carried as the float ``exact_prefactor`` instead.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Union

from .fock import ExactAmplitudes, FockVector
from .hermite import hermite2_poly
from .hypergeom import layer_hyp_factor
from .radicals import RadicalSum, split_square
from .scalars import ComplexRational

ExactComplexLike = Union[int, Fraction, ComplexRational]


@dataclass(frozen=True)
class EigenstateParams:
    """Labels of the joint (charge, pair-interaction) eigenstate.

    q is the charge (number difference); negative charge is obtained by
    relabeling the two modes, so only q >= 0 is represented.  k is an exact
    rational; the eigenvalue of K on the state is q - k - 1.  truncation
    caps each mode occupation, so layers run over n = 0 .. truncation - q.
    """

    q: int
    k: Fraction
    truncation: int

    def __post_init__(self):
        if self.q < 0:
            raise ValueError("charge q must be nonnegative")
        if not isinstance(self.k, Fraction):
            object.__setattr__(self, "k", Fraction(self.k))
        if self.truncation < self.q:
            raise ValueError("truncation too small for the requested charge")

    @property
    def n_max(self) -> int:
        return self.truncation - self.q

    @property
    def eigenvalue(self) -> Fraction:
        return Fraction(self.q) - self.k - 1

    def layers(self) -> range:
        return range(self.n_max + 1)

    def label(self) -> str:
        return f"q={self.q:02d} k={self.k} N={self.truncation:02d}"


def _as_exact_complex(value) -> ComplexRational | None:
    if isinstance(value, ComplexRational):
        return value
    if isinstance(value, (int, Fraction)):
        return ComplexRational.of(Fraction(value))
    return None


def hermite_scaled_table(u: complex, v: complex, M: int, N: int) -> List[List[complex]]:
    """Double-precision table of H_{m,n}(u, v) / sqrt(m! n!).

    Uses the scaled recurrences
        Hs_{m+1,n} = (u Hs_{m,n} - sqrt(n) Hs_{m,n-1}) / sqrt(m+1)
        Hs_{m,n+1} = (v Hs_{m,n} - sqrt(m) Hs_{m-1,n}) / sqrt(n+1)
    which keep magnitudes moderate out to large indices.
    """
    tab = [[0j] * (N + 1) for _ in range(M + 1)]
    tab[0][0] = 1.0 + 0j
    for m in range(M):
        tab[m + 1][0] = u * tab[m][0] / math.sqrt(m + 1)
    for n in range(N):
        for m in range(M + 1):
            low = math.sqrt(m) * tab[m - 1][n] if m else 0j
            tab[m][n + 1] = (v * tab[m][n] - low) / math.sqrt(n + 1)
    return tab


def pair_coherent_state(q: int, alpha, N: int) -> FockVector:
    """Charge-q state with ab-eigenvalue alpha on interior layers.

    Amplitudes alpha^n / sqrt((n+q)! n!) on (n+q, n) for n+q <= N,
    unnormalized.  Exact amplitudes are attached when alpha is exact.
    """
    if q < 0:
        raise ValueError("charge q must be nonnegative")
    if N < q:
        raise ValueError("truncation too small for the requested charge")
    exact_alpha = _as_exact_complex(alpha)
    n_max = N - q
    if exact_alpha is not None:
        exact: ExactAmplitudes = {}
        power = ComplexRational.of(1)
        for n in range(n_max + 1):
            if not power.is_zero:
                fact = factorial(n + q) * factorial(n)
                s, d = split_square(fact)
                exact[(n + q, n)] = RadicalSum({d: power * Fraction(s, fact)})
            power = power * exact_alpha
        return FockVector.from_exact(N, exact)
    alpha = complex(alpha)
    amps = {}
    power = 1.0 + 0j
    for n in range(n_max + 1):
        if power != 0:
            amps[(n + q, n)] = power / math.sqrt(factorial(n + q) * factorial(n))
        power *= alpha
    return FockVector(N, amps)


def entangled_state_vector(xi, N: int) -> FockVector:
    """Joint eigenvector of (a + b^dag) and (a^dag + b) with eigenvalue pair
    (xi, conj xi), truncated at occupation N per mode."""
    if N < 0:
        raise ValueError("truncation must be nonnegative")
    exact_xi = _as_exact_complex(xi)
    if exact_xi is not None:
        prefactor = math.exp(-float(exact_xi.abs2()) / 2.0)
        exact: ExactAmplitudes = {}
        conj = exact_xi.conjugate()
        for l in range(N + 1):
            for j in range(N + 1):
                h = hermite2_poly(l, j).evaluate(exact_xi, conj)
                if h.is_zero:
                    continue
                fact = factorial(l) * factorial(j)
                s, d = split_square(fact)
                exact[(l, j)] = RadicalSum({d: h * Fraction(s, fact)})
        return FockVector.from_exact(N, exact, prefactor)
    xi = complex(xi)
    prefactor = math.exp(-(abs(xi) ** 2) / 2.0)
    tab = hermite_scaled_table(xi, xi.conjugate(), N, N)
    amps = {
        (l, j): prefactor * tab[l][j]
        for l in range(N + 1)
        for j in range(N + 1)
        if tab[l][j] != 0
    }
    return FockVector(N, amps)


def entangled_state_polar(r: float, phi: float, N: int) -> FockVector:
    """Entangled state at xi = r * exp(i phi)."""
    return entangled_state_vector(r * cmath.exp(1j * phi), N)


def eigen_state_qk(params: EigenstateParams) -> FockVector:
    """Joint eigenstate of the charge Q (eigenvalue q) and of
    K = ab - a^dag b^dag (eigenvalue q - k - 1), truncated per mode.

    Layer n carries sqrt((n+q)!/n!) * F(n) with F the terminating
    hypergeometric factor; the square root is held exactly as a radical.
    """
    q, k = params.q, params.k
    exact: ExactAmplitudes = {}
    for n in params.layers():
        F = layer_hyp_factor(n, k, q)
        if F == 0:
            continue
        ratio = factorial(n + q) // factorial(n)
        s, d = split_square(ratio)
        exact[(n + q, n)] = RadicalSum({d: ComplexRational.of(F * s)})
    return FockVector.from_exact(params.truncation, exact)
