"""Representations and probabilistic thresholds for the relation algebras L(q,n).

The heavy lifting lives in the C++ extension ``lqn._lqn``; this package just
re-exports its surface.
"""

from ._lqn import (
    AtomStructure,
    DivisionByZero,
    Field,
    FileParseError,
    LabelMatrix,
    NotAPrimePower,
    SamePoint,
    ShapeMismatchError,
    StaleFailureError,
    bounds_report_json,
    build_doubled,
    build_lyndon,
    figure1_csv,
    figure2_csv,
    find_failures,
    is_prime_power,
    lll_product_ok,
    lll_satisfied,
    mc_estimate,
    min_n_for_epsilon,
    next_prime_power,
    randomize_t_colors,
    represent,
    slope_index,
    threshold_table,
    union_bound_value,
    verify_conditions_only,
    verify_full,
)

__all__ = [
    "AtomStructure",
    "DivisionByZero",
    "Field",
    "FileParseError",
    "LabelMatrix",
    "NotAPrimePower",
    "SamePoint",
    "ShapeMismatchError",
    "StaleFailureError",
    "bounds_report_json",
    "build_doubled",
    "build_lyndon",
    "figure1_csv",
    "figure2_csv",
    "find_failures",
    "is_prime_power",
    "lll_product_ok",
    "lll_satisfied",
    "mc_estimate",
    "min_n_for_epsilon",
    "next_prime_power",
    "randomize_t_colors",
    "represent",
    "slope_index",
    "threshold_table",
    "union_bound_value",
    "verify_conditions_only",
    "verify_full",
]
