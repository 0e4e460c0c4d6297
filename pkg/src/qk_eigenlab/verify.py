"""Residual checks for the two-mode constructions.

Exact checks (charge support, interior eigenvalue identities, entangled
eigenrelations) run on radical-sum amplitudes and must come out exactly
zero on interior layers; truncation pushes a nonzero residual onto the top
layers, which is a declared contract and is reported as such, never hidden.

Differential checks run in double precision.  A second-order central
difference is evaluated at step h and h/2; the Richardson extrapolation of
the two residuals estimates the h -> 0 violation of the identity, and that
extrapolated residual is what the tolerance gates.  A clean check therefore
shows residuals shrinking by about 4x under halving and an extrapolated
residual at rounding level.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .fock import (
    ExactAmplitudes,
    FockIndex,
    FockVector,
    apply_exact_ladder,
    apply_exact_word,
    exact_combination,
)
from .hermite import hermite2_poly
from .hypergeom import layer_hyp_factor
from .polynomial import BivariatePolynomial
from .report import BOUNDARY, FAIL, PASS, Report
from .scalars import ComplexRational
from .states import EigenstateParams, entangled_state_vector, hermite_scaled_table

# Relative residuals below this are treated as machine zero.
NOISE_FLOOR = 1e-13


class StepTooLarge(RuntimeError):
    """Halving the step changed a finite-difference residual more than 10x."""


# ----------------------------------------------------------------------
# exact eigen checks
# ----------------------------------------------------------------------


def verify_Q_eigen(state: FockVector, q: int) -> Report:
    """Check that the state is supported on the charge-q sector.

    Q is diagonal with entry na - nb, so (Q - q) annihilates the state
    exactly if and only if every stored amplitude sits on the sector; there
    is no truncation artifact to allow for.
    """
    report = Report(suite="eigenstate", case=f"q={q:02d}")
    offending = [idx for idx in state.support() if idx[0] - idx[1] != q]
    if not offending:
        report.add("charge-sector-support", PASS, "0/1")
    else:
        idx = offending[0]
        report.add(
            "charge-sector-support",
            FAIL,
            f"index=({idx[0]},{idx[1]})",
            detail=f"{len(offending)} amplitudes outside the charge-{q} sector",
        )
    return report


def _layer_of(idx: FockIndex, q: int) -> int:
    return idx[1]


def pair_interaction_residual(params: EigenstateParams) -> ExactAmplitudes:
    """Exact (K - (q-k-1)) applied to the truncated eigenstate.

    K = ab - a^dag b^dag acts on the exact amplitudes without truncation,
    so the spillover past the occupation cap stays visible in the result.
    """
    from .states import eigen_state_qk

    exact = eigen_state_qk(params).exact or {}
    lowered = apply_exact_word(exact, ["a", "b"])
    raised = apply_exact_word(exact, ["a_dag", "b_dag"])
    lam = ComplexRational.of(params.eigenvalue)
    return exact_combination((1, lowered), (-1, raised), (-lam, exact))


def verify_K_eigen(params: EigenstateParams) -> Report:
    """Exact eigen check of the pair interaction on the truncated eigenstate.

    The residual of ``pair_interaction_residual`` must vanish identically
    on layers n <= n_max - 1 and may be nonzero only on the declared
    boundary layers {n_max, n_max + 1}, where the raising part spills past
    the cap.
    """
    residual = pair_interaction_residual(params)
    report = Report(suite="eigenstate", case=params.label())
    interior_bad: List[FockIndex] = []
    off_sector: List[FockIndex] = []
    boundary: Dict[int, str] = {}
    for idx, amp in residual.items():
        if idx[0] - idx[1] != params.q:
            off_sector.append(idx)
            continue
        layer = _layer_of(idx, params.q)
        if layer <= params.n_max - 1:
            interior_bad.append(idx)
        else:
            boundary[layer] = str(amp)

    if off_sector:
        report.add("pair-eigen-sector", FAIL, f"index={sorted(off_sector)[0]}")
    if interior_bad:
        idx = sorted(interior_bad)[0]
        report.add(
            "pair-eigen-interior",
            FAIL,
            str(residual[idx]),
            detail=f"nonzero interior residual at {idx}",
        )
    else:
        report.add("pair-eigen-interior", PASS, "0/1")
    for layer in sorted(boundary):
        report.add(
            "pair-eigen-boundary",
            BOUNDARY,
            boundary[layer],
            detail=f"truncation residual on layer n={layer}",
        )
    return report


def check_pair_lowering(q: int, alpha, N: int) -> Report:
    """Exact interior check of (ab - alpha) on the pair-coherent family."""
    from .states import pair_coherent_state

    state = pair_coherent_state(q, alpha, N)
    if state.exact is None:
        raise ValueError("exact alpha required for the exact lowering check")
    a = alpha if isinstance(alpha, ComplexRational) else ComplexRational.of(Fraction(alpha))
    lowered = apply_exact_word(state.exact, ["a", "b"])
    residual = exact_combination((1, lowered), (-a, state.exact))
    n_max = N - q

    report = Report(suite="operators", case=f"q={q:02d} alpha={a} N={N:02d}")
    bad = [idx for idx in residual if idx[1] <= n_max - 1 or idx[0] - idx[1] != q]
    if bad:
        idx = sorted(bad)[0]
        report.add("pair-lowering-interior", FAIL, str(residual[idx]))
    else:
        report.add("pair-lowering-interior", PASS, "0/1")
        for idx in sorted(residual):
            report.add(
                "pair-lowering-boundary",
                BOUNDARY,
                str(residual[idx]),
                detail=f"truncation residual at {idx}",
            )
    return report


def check_xi_eigenrelations(xi, N: int) -> Report:
    """Residuals of (a + b^dag - xi) and (a^dag + b - conj xi) on the
    entangled state.

    Exact inputs give exact zeros on all components with l, j <= N - 1;
    the top layers carry the truncation residual and are reported.  Float
    inputs are checked componentwise at relative tolerance 1e-10.
    """
    state = entangled_state_vector(xi, N)
    label = f"xi={xi} N={N:02d}"
    report = Report(suite="operators", case=label)

    if state.exact is not None:
        z = xi if isinstance(xi, ComplexRational) else ComplexRational.of(Fraction(xi))
        relations = [
            ("relation-a-plus-bdag", ("a", "b_dag"), z),
            ("relation-adag-plus-b", ("a_dag", "b"), z.conjugate()),
        ]
        for identity, (op1, op2), value in relations:
            residual = exact_combination(
                (1, apply_exact_ladder(state.exact, op1)),
                (1, apply_exact_ladder(state.exact, op2)),
                (-value, state.exact),
            )
            interior_bad = [idx for idx in residual if idx[0] <= N - 1 and idx[1] <= N - 1]
            if interior_bad:
                idx = sorted(interior_bad)[0]
                report.add(identity, FAIL, str(residual[idx]), detail=f"at {idx}")
            else:
                report.add(identity, PASS, "0/1")
                boundary_max = max(
                    (abs(amp.to_complex()) for amp in residual.values()), default=0.0
                )
                report.add(
                    identity + "-boundary",
                    BOUNDARY,
                    f"{boundary_max:.6e}",
                    detail=f"{len(residual)} boundary components (float magnitude shown)",
                )
        return report

    # float path: componentwise recurrence residuals on the interior
    amps = state.amplitudes
    z = complex(xi)
    scale = max(state.max_abs(), 1e-300)
    worst = 0.0
    for l in range(N):
        for j in range(N):
            r1 = (
                math.sqrt(l + 1) * amps.get((l + 1, j), 0j)
                + math.sqrt(j) * amps.get((l, j - 1), 0j)
                - z * amps.get((l, j), 0j)
            )
            r2 = (
                math.sqrt(l) * amps.get((l - 1, j), 0j)
                + math.sqrt(j + 1) * amps.get((l, j + 1), 0j)
                - z.conjugate() * amps.get((l, j), 0j)
            )
            worst = max(worst, abs(r1) / scale, abs(r2) / scale)
    status = PASS if worst <= 1e-10 else FAIL
    report.add("relation-pair-float", status, f"{worst:.6e}")
    return report


# ----------------------------------------------------------------------
# overlap and differential checks
# ----------------------------------------------------------------------


def overlap_qk(xi, params: EigenstateParams) -> complex:
    """<entangled(xi) | q,k> summed over the truncated layers.

    Equals exp(-|xi|^2/2) * sum_{n<=n_max} H_{n+q,n}(conj xi, xi) F(n) / n!
    in double precision, with the scaled Hermite table keeping magnitudes
    moderate.
    """
    z = complex(xi) if not isinstance(xi, ComplexRational) else xi.to_complex()
    q, n_max = params.q, params.n_max
    tab = hermite_scaled_table(z.conjugate(), z, q + n_max, n_max)
    total = 0j
    for n in range(n_max + 1):
        F = layer_hyp_factor(n, params.k, q)
        if F == 0:
            continue
        ratio = factorial(n + q) // factorial(n)
        total += tab[n + q][n] * math.sqrt(ratio) * float(F)
    return math.exp(-(abs(z) ** 2) / 2.0) * total


def overlap_two_path(xi, params: EigenstateParams) -> Tuple[complex, complex, float]:
    """Overlap via the closed series and via explicit state vectors.

    Returns (series value, inner-product value, relative difference); the
    two routes share only the truncation, so agreement is a genuine
    consistency check.
    """
    from .states import eigen_state_qk

    direct = overlap_qk(xi, params)
    bra = entangled_state_vector(complex(xi), params.truncation)
    ket = eigen_state_qk(params)
    inner = bra.inner(ket)
    scale = max(abs(direct), abs(inner), 1e-300)
    return direct, inner, abs(direct - inner) / scale


def radial_boundary_term(xi, params: EigenstateParams) -> complex:
    """Analytic truncation term in the radial differential identity.

    Applying the scaling operator x d/dx + y d/dy + 1 to the truncated
    overlap telescopes through the three-term recurrences; all interior
    layers cancel against (q - k - 1) times the overlap and the survivors
    sit on the two top layers:

        B = -e^{-|xi|^2/2} / n_max! * [ (q + n_max + 1) F(n_max + 1) H_{n_max+q, n_max}
                                        + F(n_max) H_{n_max+q+1, n_max+1} ]

    with the Hermite values taken at (conj xi, xi).  The truncated overlap
    satisfies  (r d/dr + 1) f = (q - k - 1) f + B  identically.
    """
    z = complex(xi) if not isinstance(xi, ComplexRational) else xi.to_complex()
    q, n, k = params.q, params.n_max, params.k
    tab = hermite_scaled_table(z.conjugate(), z, q + n + 1, n + 1)
    ratio_n = factorial(n + q) // factorial(n)
    ratio_n1 = factorial(n + 1 + q) // factorial(n + 1)
    term1 = (q + n + 1) * float(layer_hyp_factor(n + 1, k, q)) * tab[n + q][n] * math.sqrt(ratio_n)
    term2 = (n + 1) * float(layer_hyp_factor(n, k, q)) * tab[n + q + 1][n + 1] * math.sqrt(ratio_n1)
    return -math.exp(-(abs(z) ** 2) / 2.0) * (term1 + term2)


@lru_cache(maxsize=None)
def truncated_radial_identity_residual(q: int, k: Fraction, n_max: int) -> BivariatePolynomial:
    """Exact polynomial residual of the radial identity for the truncated series.

    Builds A = sum_{n<=n_max} F(n)/n! H_{n+q,n} formally, applies the
    scaling operator plus the Gaussian-envelope correction, subtracts the
    eigenvalue term and the closed-form boundary polynomial.  The zero
    polynomial certifies the identity that the finite-difference check
    probes numerically.
    """
    A = BivariatePolynomial.zero()
    for n in range(n_max + 1):
        F = layer_hyp_factor(n, k, q)
        if F:
            A = A + hermite2_poly(n + q, n) * Fraction(F, factorial(n))
    s1s2 = BivariatePolynomial({(1, 1): Fraction(1)})
    lam = Fraction(q) - Fraction(k) - 1
    euler_side = A.scale_slots() + A - s1s2 * A
    boundary = (
        hermite2_poly(n_max + q, n_max) * ((q + n_max + 1) * layer_hyp_factor(n_max + 1, k, q))
        + hermite2_poly(n_max + q + 1, n_max + 1) * layer_hyp_factor(n_max, k, q)
    ) * Fraction(-1, factorial(n_max))
    return euler_side - lam * A - boundary


def _fd_gate(R1: complex, R2: complex, tolerance: float) -> Tuple[bool, float, Optional[float]]:
    """Gate a pair of scaled residuals at steps h and h/2.

    Returns (passed, extrapolated residual, observed order).  Raises
    StepTooLarge when halving changes the residual by more than 10x while
    above the noise floor.
    """
    r1, r2 = abs(R1), abs(R2)
    if r1 <= NOISE_FLOOR and r2 <= NOISE_FLOOR:
        return True, max(r1, r2), None
    if r2 > 0 and r1 > 10.0 * r2 and r1 > NOISE_FLOOR:
        raise StepTooLarge(f"residual dropped {r1 / r2:.1f}x under halving; reduce the step")
    extrapolated = abs(4.0 * R2 - R1) / 3.0
    order = math.log2(r1 / r2) if r2 > NOISE_FLOOR / 10 and r1 > 0 else None
    return extrapolated <= tolerance, extrapolated, order


def _fd_entry(report: Report, identity: str, R1: complex, R2: complex, tolerance: float) -> None:
    passed, extrapolated, order = _fd_gate(R1, R2, tolerance)
    detail = f"resid(h)={abs(R1):.3e} resid(h/2)={abs(R2):.3e}"
    if order is not None:
        detail += f" order={order:.2f}"
    report.add(identity, PASS if passed else FAIL, f"{extrapolated:.6e}", detail=detail)


def check_radial_pde(
    xi,
    params: EigenstateParams,
    h: float = 1e-4,
    tolerance: float = 1e-6,
) -> Report:
    """Finite-difference check of the radial differential identity.

    The truncated overlap f obeys (r d/dr + 1) f = (q - k - 1) f + B with B
    the analytic boundary term of ``radial_boundary_term``; r d/dr is taken
    along the ray of constant phase with relative step h and the Richardson
    gate of the module docstring.  An exact polynomial certificate of the
    same identity is recorded alongside the numerics.
    """
    z = complex(xi) if not isinstance(xi, ComplexRational) else xi.to_complex()
    if z == 0:
        raise ValueError("xi must be nonzero for the radial check")
    f0 = overlap_qk(z, params)
    B = radial_boundary_term(z, params)
    lam = float(params.eigenvalue)
    scale = max(abs(f0), abs(lam * f0), abs(B), 1e-300)

    def scaled_residual(step: float) -> complex:
        fp = overlap_qk(z * (1.0 + step), params)
        fm = overlap_qk(z * (1.0 - step), params)
        radial = (fp - fm) / (2.0 * step)
        return (radial + f0 - lam * f0 - B) / scale

    report = Report(
        suite="differential",
        case=f"{params.label()} absxi={abs(z):.4f} phase={cmath.phase(z):+.4f}",
    )
    exact = truncated_radial_identity_residual(params.q, params.k, params.n_max)
    report.add(
        "radial-euler-exact",
        PASS if exact.is_zero else FAIL,
        "0/1" if exact.is_zero else str(exact),
    )
    _fd_entry(report, "radial-euler-fd", scaled_residual(h), scaled_residual(h / 2), tolerance)
    report.add(
        "radial-boundary-term",
        BOUNDARY,
        f"{abs(B) / scale:.6e}",
        detail="declared truncation term in the radial identity",
    )
    return report


def check_phase_derivative(
    xi,
    params: EigenstateParams,
    h: float = 1e-4,
    tolerance: float = 1e-6,
) -> Report:
    """Finite-difference checks of the phase generator.

    (i) on states: -i d/dphi of the entangled vector equals Q applied to
    it, componentwise; (ii) on overlaps: i d/dphi equals multiplication by
    the charge q; (iii) a finite rotation multiplies the overlap by the
    pure phase exp(-i q delta).  (ii) and (iii) hold exactly for the
    truncated series, so only discretization error is visible.
    """
    z = complex(xi) if not isinstance(xi, ComplexRational) else xi.to_complex()
    if z == 0:
        raise ValueError("xi must be nonzero for the phase check")
    r, phi = abs(z), cmath.phase(z)
    N = params.truncation
    report = Report(
        suite="differential",
        case=f"{params.label()} absxi={r:.4f} phase={phi:+.4f}",
    )

    def state_at(angle: float) -> FockVector:
        return entangled_state_vector(r * cmath.exp(1j * angle), N)

    base = state_at(phi)
    target = {idx: (idx[0] - idx[1]) * amp for idx, amp in base.amplitudes.items()}
    scale = max((abs(v) for v in target.values()), default=0.0)
    scale = max(scale, base.max_abs(), 1e-300)

    def state_residual(step: float) -> Dict[FockIndex, complex]:
        plus = state_at(phi + step).amplitudes
        minus = state_at(phi - step).amplitudes
        out = {}
        for idx in base.amplitudes:
            fd = -1j * (plus.get(idx, 0j) - minus.get(idx, 0j)) / (2.0 * step)
            out[idx] = (fd - target.get(idx, 0j)) / scale
        return out

    V1 = state_residual(h)
    V2 = state_residual(h / 2)
    r1 = max((abs(v) for v in V1.values()), default=0.0)
    r2 = max((abs(v) for v in V2.values()), default=0.0)
    if r1 <= NOISE_FLOOR and r2 <= NOISE_FLOOR:
        report.add("phase-generator-state", PASS, f"{max(r1, r2):.6e}", detail="machine zero")
    else:
        if r2 > 0 and r1 > 10.0 * r2 and r1 > NOISE_FLOOR:
            raise StepTooLarge(
                f"state residual dropped {r1 / r2:.1f}x under halving; reduce the step"
            )
        # extrapolate componentwise and gate on the worst component
        extrapolated = max((abs(4.0 * V2[i] - V1.get(i, 0j)) / 3.0 for i in V2), default=0.0)
        order = math.log2(r1 / r2) if r2 > NOISE_FLOOR / 10 and r1 > 0 else None
        detail = f"resid(h)={r1:.3e} resid(h/2)={r2:.3e}"
        if order is not None:
            detail += f" order={order:.2f}"
        report.add(
            "phase-generator-state",
            PASS if extrapolated <= tolerance else FAIL,
            f"{extrapolated:.6e}",
            detail=detail,
        )

    f0 = overlap_qk(z, params)
    fscale = max(abs(f0), 1e-300)

    def overlap_residual(step: float) -> complex:
        fp = overlap_qk(r * cmath.exp(1j * (phi + step)), params)
        fm = overlap_qk(r * cmath.exp(1j * (phi - step)), params)
        return (1j * (fp - fm) / (2.0 * step) - params.q * f0) / fscale

    _fd_entry(report, "phase-generator-overlap", overlap_residual(h), overlap_residual(h / 2), tolerance)

    delta = 0.3
    rotated = overlap_qk(r * cmath.exp(1j * (phi + delta)), params)
    rotation_residual = abs(rotated * cmath.exp(1j * params.q * delta) - f0) / fscale
    report.add(
        "phase-rotation",
        PASS if rotation_residual <= 1e-10 else FAIL,
        f"{rotation_residual:.6e}",
        detail=f"finite rotation delta={delta}",
    )
    return report


# ----------------------------------------------------------------------
# divergence diagnostic
# ----------------------------------------------------------------------


def divergence_terms(q: int, k: Fraction | int, n_top: int) -> List[Fraction]:
    """Exact norm-series terms t_n = (n+q)!/n! * F(n)^2 for n = 0..n_top."""
    out = []
    for n in range(n_top + 1):
        F = layer_hyp_factor(n, k, q)
        out.append(Fraction(factorial(n + q), factorial(n)) * F * F)
    return out


def dyadic_window_maxima(terms: Sequence[Fraction]) -> List[Fraction]:
    """Maxima of terms over the windows [0, 2), [2, 4), [4, 8), ...

    The leading window covers both of the first two layers: layer 1 alone
    is identically zero whenever k = q - 1, and every window must contain
    an even layer for the floor witness to be meaningful.
    """
    maxima = []
    if len(terms) > 1:
        maxima.append(max(terms[0:2]))
    else:
        maxima.append(terms[0])
    w = 1
    while 2**w < len(terms):
        lo, hi = 2**w, min(2 ** (w + 1), len(terms))
        maxima.append(max(terms[lo:hi]))
        w += 1
    return maxima


def norm_growth_diagnostic(
    params: EigenstateParams, n_list: Sequence[int] = (8, 16, 32, 60)
) -> Report:
    """Divergence diagnostic for the norm series sum_n (n+q)!/n! F(n)^2.

    Verifies exactly that the partial sums never decrease and that every
    dyadic window of indices contains a term at least 1e-8, the witness
    that the terms do not tend to zero over the tested range.  The window
    maxima themselves are attached for inspection: families with k between
    q-2 and q diverge only logarithmically, so their maxima decay even
    though the series still diverges.
    """
    if list(n_list) != sorted(set(n_list)) or not n_list:
        raise ValueError("n_list must be increasing and nonempty")
    top = max(n_list)
    terms = divergence_terms(params.q, params.k, top)
    report = Report(suite="norm", case=f"q={params.q:02d} k={params.k}")

    monotone = all(t >= 0 for t in terms)
    sums = []
    running = Fraction(0)
    for n, t in enumerate(terms):
        running += t
        if n in n_list:
            sums.append((n, running))
    report.add(
        "partial-sums-monotone",
        PASS if monotone else FAIL,
        "0/1" if monotone else "negative term",
        detail=" ".join(f"S[{n}]={float(s):.6e}" for n, s in sums),
    )

    floor = Fraction(1, 10**8)
    maxima = dyadic_window_maxima(terms)
    floor_ok = all(m >= floor for m in maxima)
    report.add(
        "term-floor-dyadic",
        PASS if floor_ok else FAIL,
        f"{float(min(maxima)):.6e}" if maxima else "0/1",
        detail="window maxima: " + " ".join(f"{float(m):.3e}" for m in maxima),
    )
    return report
