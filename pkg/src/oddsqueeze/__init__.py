"""Exact and numerical verification of squeezed odd-number-state completeness."""

from ._version import __version__

from .exactmath import BigRational, HalfGamma, beta_int, binom_half, binom_int, factorial, gamma_half_ratio
from .orthopoly import (
    RationalPoly,
    assoc_legendre,
    gegenbauer,
    jacobi_poly_coeffs,
    jacobi_recurrence,
    jacobi_sum_a,
    jacobi_sum_b,
    relation_gegenbauer,
    relation_legendre,
)
from .overlaps import (
    SquaredOverlapForm,
    SqueezeParam,
    ZetaPoint,
    overlap_sq_form,
    overlap_value,
    unitarity_column_sum,
    unitarity_column_sum_adaptive,
    zeta_from_xi,
)
from .quadrature import QuadratureSpec, gauss_jacobi_01, gauss_legendre_01, tanh_sinh
from .records import VerificationRecord
from .completeness import (
    completeness_integral_beta,
    completeness_integral_exact,
    completeness_integral_quadrature,
    completeness_integral_racah,
    even_divergence_analytic,
    even_divergence_probe,
    even_divergence_slope,
    identity_gegenbauer,
    identity_gegenbauer_rhs,
    identity_legendre,
    identity_legendre_rhs,
    racah_inner_sum,
    resolution_diagonal,
)
from .operators import (
    disc_resolution_check,
    ladder_ops,
    overlap_crosscheck,
    parity_offblock_max,
    recommended_dim,
    squeeze_matrix,
    unitarity_defect,
)
from .report import ReportDocument, SuiteConfig, document_to_dict, emit_report
from .suites import run_suite

__all__ = [
    "BigRational",
    "HalfGamma",
    "QuadratureSpec",
    "RationalPoly",
    "ReportDocument",
    "SquaredOverlapForm",
    "SqueezeParam",
    "SuiteConfig",
    "VerificationRecord",
    "ZetaPoint",
    "assoc_legendre",
    "beta_int",
    "binom_half",
    "binom_int",
    "completeness_integral_beta",
    "completeness_integral_exact",
    "completeness_integral_quadrature",
    "completeness_integral_racah",
    "disc_resolution_check",
    "document_to_dict",
    "emit_report",
    "even_divergence_analytic",
    "even_divergence_probe",
    "even_divergence_slope",
    "factorial",
    "gamma_half_ratio",
    "gauss_jacobi_01",
    "gauss_legendre_01",
    "gegenbauer",
    "identity_gegenbauer",
    "identity_gegenbauer_rhs",
    "identity_legendre",
    "identity_legendre_rhs",
    "jacobi_poly_coeffs",
    "jacobi_recurrence",
    "jacobi_sum_a",
    "jacobi_sum_b",
    "ladder_ops",
    "overlap_crosscheck",
    "overlap_sq_form",
    "overlap_value",
    "parity_offblock_max",
    "racah_inner_sum",
    "recommended_dim",
    "relation_gegenbauer",
    "relation_legendre",
    "resolution_diagonal",
    "run_suite",
    "squeeze_matrix",
    "tanh_sinh",
    "unitarity_column_sum",
    "unitarity_column_sum_adaptive",
    "unitarity_defect",
    "zeta_from_xi",
]
