"""Stable evaluation of interpolating polynomials and Newton coefficients.

A small numerical library around one family of quantities: the prefix
values p_0(z;t), ..., p_N(z;t) of an interpolation problem, computed by a
classical triangular recurrence and by a product-sum algorithm whose
accuracy does not depend on how the knots are ordered.  Conditioning
diagnostics, knot orderings, and normalized error metrics round out the
toolkit; the ``interpstab`` CLI drives reproducible experiments.
"""

from .analysis import (
    ErrorMetrics,
    StabilityBounds,
    StabilityReport,
    condition_number,
    error1,
    error2,
    error3,
    error3_table,
    growth_constant_L,
    monomial,
    monomial_values,
    newton_coefficient_errors,
    stability_bounds,
    stability_report,
)
from .errors import (
    ConfigError,
    DegenerateConditioning,
    DistinctnessViolation,
    InputFormatError,
    InterpstabError,
    InvalidScalar,
    OrderingDomainError,
    ShapeError,
)
from .interp import (
    AlgorithmIIState,
    aitken_evaluate,
    algorithm1_prefix,
    algorithm2_prefix,
    algorithm2_state,
    divided_differences,
    newton_evaluate,
)
from .numerics import (
    condition_sums,
    oracle_prefix_values,
    unit_roundoff,
)
from .ordering import (
    AS_GIVEN,
    DECREASING,
    INCREASING,
    LEJA,
    OrderingPermutation,
    apply_permutation,
    order_as_given,
    order_leja,
    order_monotone,
)
from .problem import NEWTON_COEFFICIENTS, EvalSpec, InterpProblem, Scalar

__version__ = "0.1.0"

__all__ = [
    "AS_GIVEN",
    "AlgorithmIIState",
    "ConfigError",
    "DECREASING",
    "DegenerateConditioning",
    "DistinctnessViolation",
    "ErrorMetrics",
    "EvalSpec",
    "INCREASING",
    "InputFormatError",
    "InterpProblem",
    "InterpstabError",
    "InvalidScalar",
    "LEJA",
    "NEWTON_COEFFICIENTS",
    "OrderingDomainError",
    "OrderingPermutation",
    "Scalar",
    "ShapeError",
    "StabilityBounds",
    "StabilityReport",
    "aitken_evaluate",
    "algorithm1_prefix",
    "algorithm2_prefix",
    "algorithm2_state",
    "apply_permutation",
    "condition_number",
    "condition_sums",
    "divided_differences",
    "error1",
    "error2",
    "error3",
    "error3_table",
    "growth_constant_L",
    "monomial",
    "monomial_values",
    "newton_coefficient_errors",
    "newton_evaluate",
    "oracle_prefix_values",
    "order_as_given",
    "order_leja",
    "order_monotone",
    "stability_bounds",
    "stability_report",
    "unit_roundoff",
]
