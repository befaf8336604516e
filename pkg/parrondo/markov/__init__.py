from ._core import (
    ROW_SUM_TOL,
    validate_stochastic,
    validate_distribution,
    matrix_power,
    evolve,
    lazy_chain,
    is_fixed_vector,
)
from ._classify import (
    is_irreducible,
    is_regular,
    strong_components,
    first_positive_power,
    wielandt_bound,
)
from ._stationary import (
    RESIDUAL_TOL,
    stationary,
    power_iteration,
    limit_matrix,
    contraction_diagnostics,
)

__all__ = [
    "ROW_SUM_TOL",
    "RESIDUAL_TOL",
    "validate_stochastic",
    "validate_distribution",
    "matrix_power",
    "evolve",
    "lazy_chain",
    "is_fixed_vector",
    "is_irreducible",
    "is_regular",
    "strong_components",
    "first_positive_power",
    "wielandt_bound",
    "stationary",
    "power_iteration",
    "limit_matrix",
    "contraction_diagnostics",
]
