"""qk_eigenlab: exact verification lab for two-mode Fock-space constructions.

The package builds three state families on a truncated two-mode Fock
lattice (pair-coherent states, the entangled eigenvector family of
(a + b^dag) and (a^dag + b), and the joint eigenstates of the charge
Q = a^dag a - b^dag b and the pair interaction K = ab - a^dag b^dag) and
mechanically checks every identity they satisfy: polynomial recurrences of
the two-variable Hermite family, the Gauss three-term relation of the
terminating hypergeometric factors, Gaussian-plane orthogonality and
completeness, eigenvalue residuals, differential identities of the overlap,
and the divergence of the norm series.  Exact rational arithmetic wherever
an identity is exact; double precision only in the finite-difference
checks.
"""

from .config import ConfigError, SuiteConfig, load_config
from .fock import FockIndex, FockVector, SparseOperator, build_ladder_ops, commutator
from .hermite import (
    check_recurrences,
    generating_function_coeffs,
    hermite2_eval,
    hermite2_poly,
    phase_factorization_check,
)
from .hypergeom import (
    PoleError,
    gauss_contiguous_residual,
    hyp2f1_terminating,
    layer_hyp_factor,
    pochhammer,
)
from .moments import (
    check_completeness,
    check_hermite_orthogonality,
    gaussian_moment,
    integrate_polynomial,
    norm_integral,
    norm_partial_sum,
    reconstruct_qk,
)
from .polynomial import BivariatePolynomial
from .radicals import RadicalSum, split_square
from .report import Report, ReportEntry
from .scalars import ComplexRational, ParseError, Rational, format_rational, parse_rational
from .states import (
    EigenstateParams,
    eigen_state_qk,
    entangled_state_vector,
    pair_coherent_state,
)
from .verify import (
    StepTooLarge,
    check_pair_lowering,
    pair_interaction_residual,
    check_phase_derivative,
    check_radial_pde,
    check_xi_eigenrelations,
    norm_growth_diagnostic,
    overlap_qk,
    overlap_two_path,
    verify_K_eigen,
    verify_Q_eigen,
)

__version__ = "0.1.0"

__all__ = [
    "BivariatePolynomial",
    "ComplexRational",
    "ConfigError",
    "EigenstateParams",
    "FockIndex",
    "FockVector",
    "ParseError",
    "PoleError",
    "RadicalSum",
    "Rational",
    "Report",
    "ReportEntry",
    "SparseOperator",
    "StepTooLarge",
    "SuiteConfig",
    "build_ladder_ops",
    "check_completeness",
    "check_hermite_orthogonality",
    "check_pair_lowering",
    "check_phase_derivative",
    "check_radial_pde",
    "check_recurrences",
    "check_xi_eigenrelations",
    "commutator",
    "eigen_state_qk",
    "entangled_state_vector",
    "format_rational",
    "gauss_contiguous_residual",
    "gaussian_moment",
    "generating_function_coeffs",
    "hermite2_eval",
    "hermite2_poly",
    "hyp2f1_terminating",
    "integrate_polynomial",
    "layer_hyp_factor",
    "load_config",
    "norm_growth_diagnostic",
    "norm_integral",
    "norm_partial_sum",
    "overlap_qk",
    "overlap_two_path",
    "pair_coherent_state",
    "pair_interaction_residual",
    "parse_rational",
    "phase_factorization_check",
    "pochhammer",
    "reconstruct_qk",
    "split_square",
    "verify_K_eigen",
    "verify_Q_eigen",
]
