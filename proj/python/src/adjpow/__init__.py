"""Exact decomposition coefficients of tensor powers of the adjoint of A_n."""

from ._core import (
    CostLimitError,
    DomainError,
    ExactDivisionError,
    OracleError,
    adjoint_power,
    binomial,
    coefficient_contraction,
    coefficient_main,
    coefficient_row,
    coefficient_rows_recurrence,
    derangement,
    derangement_enumeration_oracle,
    dynkin_to_stable,
    egf_coefficients,
    euler_table,
    extract_y_contents,
    factorial,
    freudenthal_weights,
    higher_derangement,
    higher_derangement_table,
    render_table,
    stable_to_dynkin,
    verify_combinatorics,
    verify_stable_decomposition,
    weyl_dimension,
)

__all__ = [name for name in dir() if not name.startswith("_")]
