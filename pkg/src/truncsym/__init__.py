"""truncsym: exact verification of truncated power algebra and slope bounds.

Submodules:

- ``fp_linalg``: exact dense linear algebra over prime fields.
- ``monomial_box``: capped multi-index boxes and dominance matchings.
- ``trunc_power``: truncated symmetric powers and their Koszul resolution.
- ``trunc_algebra``: the truncated polynomial algebra with derivations.
- ``filtration``: local model of the connection filtration.
- ``slopes``: exact rational slope and stability-bound arithmetic.
- ``suites``: parameterized verification suites with seeded reports.
- ``scenario``: batch slope evaluation from JSON records.
"""

from .fp_linalg import FpMatrix, FpScalar, is_prime, mat_mul, rank, row_reduce, span_dim
from .filtration import (
    CurveReport,
    NablaTerm,
    curve_report,
    filtration_basis,
    graded_nabla_matrix,
    nabla,
    nabla_power,
    nabla_power_row,
)
from .monomial_box import (
    Box,
    Matching,
    MatchingVerdict,
    box_size,
    dominance_matching,
    dominates,
    enumerate_box,
    hall_matching_exists,
    verify_matching,
)
from .slopes import (
    EqualityDiagnosis,
    InstabilityBound,
    SlopeData,
    WeightSumVerdict,
    curve_gap,
    equality_diagnosis,
    gap_lower_bound,
    graded_slope,
    instability_bound,
    make_slope_data,
    pushforward_c1,
    pushforward_rank,
    pushforward_slope,
    validate_profile,
    weight_sum_check,
)
from .suites import ALL_SUITES, ConfigError, Report, SuiteConfig, run_suite
from .trunc_algebra import (
    GradedSubspace,
    GrowthVerdict,
    apply_diff,
    check_upper_half_growth,
    diff_action_matrix,
    grade_basis,
    omega_pairing_matrix,
    spanned_image_dim,
)
from .trunc_power import (
    KoszulVerdict,
    WordMatrix,
    degree_weight_check,
    gl2_dim,
    koszul_complex,
    multiset_words,
    symmetrization_matrix,
    symmetrized_tensor,
    trunc_basis,
    trunc_rank,
    verify_koszul_exact,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_SUITES",
    "Box",
    "ConfigError",
    "CurveReport",
    "EqualityDiagnosis",
    "FpMatrix",
    "FpScalar",
    "GradedSubspace",
    "GrowthVerdict",
    "InstabilityBound",
    "KoszulVerdict",
    "Matching",
    "MatchingVerdict",
    "NablaTerm",
    "Report",
    "SlopeData",
    "SuiteConfig",
    "WeightSumVerdict",
    "WordMatrix",
    "apply_diff",
    "box_size",
    "check_upper_half_growth",
    "curve_gap",
    "curve_report",
    "degree_weight_check",
    "diff_action_matrix",
    "dominance_matching",
    "dominates",
    "enumerate_box",
    "equality_diagnosis",
    "filtration_basis",
    "gap_lower_bound",
    "gl2_dim",
    "grade_basis",
    "graded_nabla_matrix",
    "graded_slope",
    "hall_matching_exists",
    "instability_bound",
    "is_prime",
    "koszul_complex",
    "make_slope_data",
    "mat_mul",
    "multiset_words",
    "nabla",
    "nabla_power",
    "nabla_power_row",
    "omega_pairing_matrix",
    "pushforward_c1",
    "pushforward_rank",
    "pushforward_slope",
    "rank",
    "row_reduce",
    "run_suite",
    "span_dim",
    "spanned_image_dim",
    "symmetrization_matrix",
    "symmetrized_tensor",
    "trunc_basis",
    "trunc_rank",
    "validate_profile",
    "verify_koszul_exact",
    "verify_matching",
    "weight_sum_check",
]
