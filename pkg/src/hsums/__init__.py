"""Nested harmonic sums: exact values, quasi-shuffle algebra, Lyndon bases,
and analytic continuation of their Mellin representations to complex
argument, with an independent quadrature oracle and a CLI front end."""

__version__ = "0.1.0"

from .algebra import (
    RelationSystem,
    build_relations,
    reduce_to_basis,
    stuffle_product,
)
from .continuation import (
    asymptotic_coeffs,
    differentiate,
    evaluate_complex,
    map_branch,
    recursion_shift,
    taylor_at_one,
)
from .errors import (
    AccuracyWarning,
    CapabilityError,
    HsumsError,
    PoleError,
    ResourceBudgetError,
    UsageError,
)
from .exact import (
    EvalCache,
    FloatEval,
    LimitResult,
    eval_exact,
    eval_float,
    eval_oracle,
    limit_value,
)
from .expressions import HarmonicExpr
from .indices import (
    IndexVector,
    count_basis_no_minus_one,
    count_no_minus_one,
    count_total,
    enumerate_sums,
    is_lyndon,
    lyndon_words,
    reduction_table,
)
from .mellin import QuadratureSpec, mellin_numeric, numerator_eval
from .polygamma import beta_fn, duplication_check, psi
from .registry import BasicFunction, get_function, registry_list
from .series import AsymptoticSeries, FactorialSeries, factorial_to_asymptotic

__all__ = [
    "AccuracyWarning",
    "AsymptoticSeries",
    "BasicFunction",
    "CapabilityError",
    "EvalCache",
    "FactorialSeries",
    "FloatEval",
    "HarmonicExpr",
    "HsumsError",
    "IndexVector",
    "LimitResult",
    "PoleError",
    "QuadratureSpec",
    "RelationSystem",
    "ResourceBudgetError",
    "UsageError",
    "asymptotic_coeffs",
    "beta_fn",
    "build_relations",
    "count_basis_no_minus_one",
    "count_no_minus_one",
    "count_total",
    "differentiate",
    "duplication_check",
    "enumerate_sums",
    "eval_exact",
    "eval_float",
    "eval_oracle",
    "evaluate_complex",
    "factorial_to_asymptotic",
    "get_function",
    "is_lyndon",
    "limit_value",
    "lyndon_words",
    "map_branch",
    "mellin_numeric",
    "numerator_eval",
    "psi",
    "recursion_shift",
    "reduce_to_basis",
    "reduction_table",
    "registry_list",
    "stuffle_product",
    "taylor_at_one",
]
