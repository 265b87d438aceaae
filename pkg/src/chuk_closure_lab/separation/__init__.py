"""
Separation of rational languages: closure expressions and their kappa-terms,
the separation engine and its verdicts.
"""

from .closure_terms import (
    ClosureBase,
    ClosureExpr,
    ClosureProduct,
    ClosureSigmaPlus,
    ClosureUnion,
    ClosureWords,
    closure_expr,
    enumerate_closure_terms,
    raw_plus,
    underlying_language,
)
from .engine import (
    check_separator,
    iter_candidate_rows,
    iter_cyclic_rows,
    separate_by_g,
    separate_by_v,
)
from .verdicts import NotSeparable, Separable, SeparationBudgets, SeparationVerdict, Unknown

__all__ = [
    # Closure expressions
    "ClosureExpr",
    "ClosureBase",
    "ClosureWords",
    "ClosureUnion",
    "ClosureProduct",
    "ClosureSigmaPlus",
    "closure_expr",
    "raw_plus",
    "underlying_language",
    "enumerate_closure_terms",
    # Verdicts
    "SeparationBudgets",
    "SeparationVerdict",
    "Separable",
    "NotSeparable",
    "Unknown",
    # Engine
    "separate_by_g",
    "separate_by_v",
    "check_separator",
    "iter_candidate_rows",
    "iter_cyclic_rows",
]
