"""Exact enumeration of pattern-avoiding permutations via lattice paths.

The package realizes two bijections between pattern-avoiding permutations
and closed Dyck paths, transports pattern statistics to path weights,
evaluates the matching continued-fraction and Chebyshev closed-form
generating functions as exact truncated power series, extracts asymptotic
estimates, and checks everything against exhaustive brute-force censuses.
"""

from .permutations import (
    Pattern,
    Permutation,
    avoids,
    count_occurrences,
    find_occurrence,
    left_to_right_minima,
    right_to_left_maxima,
)
from .paths import (
    LatticePath,
    MissingWeightError,
    OracleBoundError,
    WeightSpec,
    enumerate_paths,
    peaks,
    weight_motzkin,
    weight_peaked,
    weight_w1,
    weight_w2,
)
from .bijections import (
    PatternViolationError,
    convert_123_to_132,
    phi,
    phi_inverse,
    phi_via_minima,
    psi,
    psi_inverse,
)
from .series import (
    HalfPowerSeries,
    TruncatedSeries,
    YPolynomial,
    bivariate_gf_12k,
    bivariate_gf_k1k,
    cf_motzkin,
    cf_peaked_dyck,
    expand_rational,
)
from .orthopoly import (
    PolySystem,
    chebyshev_u,
    constraint_solutions,
    dyck_denominator,
    dyck_system,
    gf_avoiders_12k,
    gf_avoiders_23k1,
    gf_avoiders_k1k,
    gf_exactly_r_12k,
    gf_exactly_r_23k1,
    gf_exactly_r_k1k,
    strip_gf,
)
from .asymptotics import (
    AsymptoticEstimate,
    asymptotic_count,
    comparison_table,
    leading_term,
    min_positive_root,
    theta_probe,
)
from .oracle import (
    Census,
    avoiding_permutations,
    bounded_weight_sum,
    census,
    count_avoiders,
    path_census,
)

__all__ = [
    "AsymptoticEstimate",
    "Census",
    "HalfPowerSeries",
    "LatticePath",
    "MissingWeightError",
    "OracleBoundError",
    "Pattern",
    "PatternViolationError",
    "Permutation",
    "PolySystem",
    "TruncatedSeries",
    "WeightSpec",
    "YPolynomial",
    "asymptotic_count",
    "avoiding_permutations",
    "avoids",
    "bivariate_gf_12k",
    "bivariate_gf_k1k",
    "bounded_weight_sum",
    "census",
    "cf_motzkin",
    "cf_peaked_dyck",
    "chebyshev_u",
    "comparison_table",
    "constraint_solutions",
    "convert_123_to_132",
    "count_avoiders",
    "count_occurrences",
    "dyck_denominator",
    "dyck_system",
    "enumerate_paths",
    "expand_rational",
    "find_occurrence",
    "gf_avoiders_12k",
    "gf_avoiders_23k1",
    "gf_avoiders_k1k",
    "gf_exactly_r_12k",
    "gf_exactly_r_23k1",
    "gf_exactly_r_k1k",
    "leading_term",
    "left_to_right_minima",
    "min_positive_root",
    "path_census",
    "peaks",
    "phi",
    "phi_inverse",
    "phi_via_minima",
    "psi",
    "psi_inverse",
    "right_to_left_maxima",
    "strip_gf",
    "theta_probe",
    "weight_motzkin",
    "weight_peaked",
    "weight_w1",
    "weight_w2",
]

__version__ = "0.1.0"
