"""Suite runners for the verification driver.

Each runner maps a SuiteConfig to a list of flat report records.  Grids are
chosen so the full default sweep finishes in well under a minute; the
records are sorted by the caller, so runners are free to emit in any order
and may run concurrently (everything below is pure).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Dict, List

from .config import SuiteConfig
from .fock import build_ladder_ops, commutator
from .hermite import (
    check_recurrences,
    generating_function_coeffs,
    hermite2_poly,
    phase_factorization_check,
    symmetry_residual,
)
from .hypergeom import gauss_contiguous_residual
from .moments import (
    InconsistencyError,
    check_completeness,
    check_hermite_orthogonality,
    norm_integral,
    reconstruct_qk,
)
from .report import FAIL, PASS, Report
from .scalars import ComplexRational, format_rational
from .states import EigenstateParams, eigen_state_qk
from .verify import (
    StepTooLarge,
    check_pair_lowering,
    check_phase_derivative,
    check_radial_pde,
    check_xi_eigenrelations,
    norm_growth_diagnostic,
    overlap_two_path,
    verify_K_eigen,
    verify_Q_eigen,
)

Records = List[Dict[str, str]]

# |xi| values (exact halves) and the fixed ray used by the differential suite.
DIFFERENTIAL_RADII = (Fraction(1, 2), Fraction(1), Fraction(3, 2))
DIFFERENTIAL_PHASE = math.pi / 6

# Exact sample points: one on the unit circle, one generic, used by the
# operator suite for exact eigenrelation checks.
EXACT_XI_SAMPLES = (
    ComplexRational.of(Fraction(3, 5), Fraction(4, 5)),
    ComplexRational.of(Fraction(1, 2), Fraction(-1, 3)),
)


def suite_hermite(cfg: SuiteConfig) -> Records:
    records: Records = []
    for m in range(11):
        for n in range(11):
            records += check_recurrences(m, n).records()
            res = symmetry_residual(m, n)
            rep = Report(suite="hermite", case=f"m={m:02d} n={n:02d}")
            rep.add("index-slot-symmetry", PASS if res.is_zero else FAIL,
                    "0/1" if res.is_zero else str(res))
            records += rep.records()
    table = generating_function_coeffs(6, 6)
    for (m, n), poly in sorted(table.items()):
        rep = Report(suite="hermite", case=f"genfun m={m:02d} n={n:02d}")
        res = poly - hermite2_poly(m, n)
        rep.add("generating-function", PASS if res.is_zero else FAIL,
                "0/1" if res.is_zero else str(res))
        records += rep.records()
    unit = ComplexRational.of(Fraction(3, 5), Fraction(4, 5))
    for n in range(9):
        for q in range(7):
            records += phase_factorization_check(n, q, unit).records()
    return records


def suite_contiguous(cfg: SuiteConfig) -> Records:
    records: Records = []
    for q in cfg.charges():
        for k in cfg.k_values:
            worst = Fraction(0)
            ok = True
            for n in range(31):
                res = gauss_contiguous_residual(n, k, q)
                if res != 0:
                    ok = False
                    worst = res
                    break
            rep = Report(suite="contiguous", case=f"q={q:02d} k={k} n<=30")
            rep.add("gauss-three-term", PASS if ok else FAIL,
                    "0/1" if ok else format_rational(worst))
            records += rep.records()
    return records


def suite_orthogonality(cfg: SuiteConfig) -> Records:
    records: Records = []
    for l in range(6):
        for j in range(6):
            for m in range(6):
                for n in range(6):
                    records += check_hermite_orthogonality(l, j, m, n).records()
    records += check_completeness(5).records()
    return records


def suite_operators(cfg: SuiteConfig) -> Records:
    records: Records = []
    N = cfg.truncation
    ops = build_ladder_ops(N)
    rep = Report(suite="operators", case=f"ladder N={N:02d}")
    adjoint_ok = ops["a_dag"] == ops["a"].adjoint() and ops["b_dag"] == ops["b"].adjoint()
    rep.add("adjoint-pairing", PASS if adjoint_ok else FAIL, "0/1" if adjoint_ok else "mismatch")
    comm = commutator(ops["K"], ops["Q"])
    rep.add("charge-commutant", PASS if comm.is_zero() else FAIL,
            "0/1" if comm.is_zero() else f"{comm.nnz} entries")
    records += rep.records()

    xi_trunc = min(N, 10)  # exact Hermite evaluation cost grows fast with N
    for z in EXACT_XI_SAMPLES:
        records += check_xi_eigenrelations(z, xi_trunc).records()
    records += check_xi_eigenrelations(0.8 - 0.35j, N).records()

    alpha = ComplexRational.of(Fraction(3, 5), Fraction(4, 5))
    for q in cfg.charges():
        records += check_pair_lowering(q, alpha, N).records()
    return records


def suite_eigenstate(cfg: SuiteConfig) -> Records:
    records: Records = []
    for q in cfg.charges():
        for k in cfg.k_values:
            params = EigenstateParams(q, k, cfg.truncation)
            qrep = verify_Q_eigen(eigen_state_qk(params), q)
            qrep.case = params.label()
            records += qrep.records()
            records += verify_K_eigen(params).records()
    return records


def suite_reconstruction(cfg: SuiteConfig) -> Records:
    records: Records = []
    N = min(cfg.truncation, 10)
    for q in cfg.charges():
        if q > 3:
            continue  # reconstruction grid is pinned to small charge
        for k in cfg.k_values:
            params = EigenstateParams(q, k, N)
            records += reconstruct_qk(params).records()
    return records


def suite_differential(cfg: SuiteConfig) -> Records:
    records: Records = []
    for q in cfg.charges():
        for k in cfg.k_values:
            params = EigenstateParams(q, k, cfg.truncation)
            for r in DIFFERENTIAL_RADII:
                xi = float(r) * complex(math.cos(DIFFERENTIAL_PHASE), math.sin(DIFFERENTIAL_PHASE))
                case = f"{params.label()} absxi={float(r):.4f}"
                try:
                    records += check_radial_pde(
                        xi, params, h=cfg.fd_step, tolerance=cfg.tolerance
                    ).records()
                except StepTooLarge as exc:
                    rep = Report(suite="differential", case=case)
                    rep.add("radial-euler-fd", FAIL, "step", detail=str(exc))
                    records += rep.records()
                try:
                    records += check_phase_derivative(
                        xi, params, h=cfg.fd_step, tolerance=cfg.tolerance
                    ).records()
                except StepTooLarge as exc:
                    rep = Report(suite="differential", case=case)
                    rep.add("phase-generator-overlap", FAIL, "step", detail=str(exc))
                    records += rep.records()

            consistency = Report(suite="differential", case=params.label())
            _, _, relerr = overlap_two_path(0.9 + 0.4j, params)
            consistency.add("overlap-two-path", PASS if relerr <= 1e-9 else FAIL, f"{relerr:.6e}")
            records += consistency.records()
    return records


def suite_norm(cfg: SuiteConfig) -> Records:
    records: Records = []
    integral_top = min(cfg.truncation, 30)
    for q in cfg.charges():
        for k in cfg.k_values:
            params = EigenstateParams(q, k, max(cfg.truncation, q))
            records += norm_growth_diagnostic(params).records()
            rep = Report(suite="norm", case=f"q={q:02d} k={k} n_top={integral_top}")
            try:
                norm_integral(params, integral_top)
                rep.add("integral-sum-consistency", PASS, "0/1")
            except InconsistencyError as exc:
                rep.add("integral-sum-consistency", FAIL, "mismatch", detail=str(exc))
            records += rep.records()
    return records


SUITES: Dict[str, Callable[[SuiteConfig], Records]] = {
    "hermite": suite_hermite,
    "contiguous": suite_contiguous,
    "orthogonality": suite_orthogonality,
    "operators": suite_operators,
    "eigenstate": suite_eigenstate,
    "reconstruction": suite_reconstruction,
    "differential": suite_differential,
    "norm": suite_norm,
}
