"""Weight hierarchies, gap numbers, locality and bounds for linear codes."""

from .algebra import Field, FieldElement, Matrix, field_new
from .code import CodeValidationError, LinearCode, SubcodeWitness, code_from_generator
from .ghw import (
    DualityReport,
    LimitError,
    WeightHierarchy,
    check_wei_duality,
    gap_numbers,
    ghw,
    ghw_oracle,
    gk_dual,
    weight_hierarchy,
)
from .locality import LocalityProfile, coordinate_locality, covering_rows, is_lrc, locality
from .bounds import (
    BoundReport,
    certify_optimal,
    d_opt_surrogate,
    dual_ghw_saturation,
    dual_ghw_step_bound,
    dual_ghw_upper,
    gap_lower_bound,
    generalized_singleton_like_bound,
    k_opt_surrogate,
    mu_rho,
    optimal_dual_ghw_lower,
    optimal_dual_hierarchy,
    optimal_gap_upper,
    optimal_primal_ghw_lower,
    optimal_primal_hierarchy,
    prop1_bound,
    prop2_bound,
    singleton_like_bound,
)
from .constructions import ConstructionSpec, random_code, reed_solomon, tamo_barg

__version__ = "0.1.0"

__all__ = [
    "Field",
    "FieldElement",
    "Matrix",
    "field_new",
    "CodeValidationError",
    "LinearCode",
    "SubcodeWitness",
    "code_from_generator",
    "DualityReport",
    "LimitError",
    "WeightHierarchy",
    "check_wei_duality",
    "gap_numbers",
    "ghw",
    "ghw_oracle",
    "gk_dual",
    "weight_hierarchy",
    "LocalityProfile",
    "coordinate_locality",
    "covering_rows",
    "is_lrc",
    "locality",
    "BoundReport",
    "certify_optimal",
    "d_opt_surrogate",
    "dual_ghw_saturation",
    "dual_ghw_step_bound",
    "dual_ghw_upper",
    "gap_lower_bound",
    "generalized_singleton_like_bound",
    "k_opt_surrogate",
    "mu_rho",
    "optimal_dual_ghw_lower",
    "optimal_dual_hierarchy",
    "optimal_gap_upper",
    "optimal_primal_ghw_lower",
    "optimal_primal_hierarchy",
    "prop1_bound",
    "prop2_bound",
    "singleton_like_bound",
    "ConstructionSpec",
    "random_code",
    "reed_solomon",
    "tamo_barg",
]
