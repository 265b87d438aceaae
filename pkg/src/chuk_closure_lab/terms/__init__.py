"""
Kappa-bar terms: exponents, canonical terms and the term parser.

Evaluation lives in chuk_closure_lab.terms.evaluation, which depends on the
semigroup and language packages.
"""

from .exponent import (
    OMEGA,
    Exponent,
    add,
    divide,
    exp_arith,
    mul_int,
    normalize_unary_bn,
    sub_int,
    sum_exponents,
)
from .kappa import (
    EMPTY,
    KappaTerm,
    Layout,
    Power,
    Word,
    canonicalize,
    concat,
    normalize_term,
    omega_power,
    power,
    rank_nu,
    simplify_over_s,
    word,
)
from .parser import parse_exponent, parse_term

__all__ = [
    # Exponents
    "Exponent",
    "OMEGA",
    "add",
    "sub_int",
    "mul_int",
    "divide",
    "sum_exponents",
    "exp_arith",
    "normalize_unary_bn",
    # Terms
    "KappaTerm",
    "Word",
    "Power",
    "Layout",
    "EMPTY",
    "canonicalize",
    "concat",
    "power",
    "omega_power",
    "word",
    "rank_nu",
    "normalize_term",
    "simplify_over_s",
    "parse_term",
    "parse_exponent",
]
