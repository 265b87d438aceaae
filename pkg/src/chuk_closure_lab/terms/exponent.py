# src/chuk_closure_lab/terms/exponent.py
"""
Exponents of kappa-bar terms.

An exponent is either a finite positive integer k or omega + n for an integer n.
Arithmetic follows the profinite rules: omega + omega = omega and d * omega = omega
for d >= 1, so every operation below stays inside the omega + n family.
"""

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import ExpansionUnderflowError, ExponentRangeError, NotDivisibleError

# Sanity bound on |n| for omega + n
OMEGA_OFFSET_BOUND = 10**6


class Exponent(BaseModel):
    """Finite(k >= 1) or OmegaPlus(n), the latter standing for omega + n"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["finite", "omega"] = Field(..., description="finite or omega")
    value: int = Field(..., description="k for Finite(k), n for OmegaPlus(n)")

    @model_validator(mode="after")
    def check_range(self) -> "Exponent":
        if self.kind == "finite" and self.value < 1:
            raise ValueError(f"finite exponent must be >= 1, got {self.value}")
        if self.kind == "omega" and abs(self.value) > OMEGA_OFFSET_BOUND:
            raise ValueError(f"omega offset out of range: {self.value}")
        return self

    @classmethod
    def finite(cls, k: int) -> "Exponent":
        return cls(kind="finite", value=k)

    @classmethod
    def omega_plus(cls, n: int = 0) -> "Exponent":
        if abs(n) > OMEGA_OFFSET_BOUND:
            raise ExponentRangeError(f"omega offset out of range: {n}")
        return cls(kind="omega", value=n)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def approximant(self, n: int) -> int:
        """epsilon_n of this exponent: k for Finite(k), n! + k for OmegaPlus(k)"""
        if self.is_finite:
            return self.value
        result = math.factorial(n) + self.value
        if result < 1:
            raise ExpansionUnderflowError(
                f"{n}! + ({self.value}) = {result} is not a positive exponent"
            )
        return result

    def to_text(self) -> str:
        """Term-syntax form: 3, w, (w+2), (w-1)"""
        if self.is_finite:
            return str(self.value)
        if self.value == 0:
            return "w"
        sign = "+" if self.value > 0 else "-"
        return f"(w{sign}{abs(self.value)})"

    def __str__(self) -> str:
        return self.to_text()


OMEGA = Exponent.omega_plus(0)


def add(alpha: Exponent, d: int) -> Exponent:
    """alpha + d"""
    if alpha.is_finite:
        return Exponent.finite(alpha.value + d)
    return Exponent.omega_plus(alpha.value + d)


def sub_int(alpha: Exponent, d: int) -> Exponent:
    """alpha - d"""
    return add(alpha, -d)


def mul_int(alpha: Exponent, d: int) -> Exponent:
    """d * alpha, using d * omega = omega"""
    if d < 1:
        raise ValueError(f"multiplier must be >= 1, got {d}")
    if alpha.is_finite:
        return Exponent.finite(alpha.value * d)
    return Exponent.omega_plus(alpha.value * d)


def divide(alpha: Exponent, d: int) -> Exponent:
    """
    The exponent beta with d * beta = alpha.

    For omega + n a quotient exists exactly when d divides n.
    """
    if d < 1:
        raise ValueError(f"divisor must be >= 1, got {d}")
    if alpha.value % d != 0:
        raise NotDivisibleError(f"{d} does not divide the offset of {alpha.to_text()}")
    if alpha.is_finite:
        return Exponent.finite(alpha.value // d)
    return Exponent.omega_plus(alpha.value // d)


def sum_exponents(alpha: Exponent, beta: Exponent) -> Exponent:
    """alpha + beta, using omega + omega = omega"""
    if alpha.is_finite and beta.is_finite:
        return Exponent.finite(alpha.value + beta.value)
    return Exponent.omega_plus(alpha.value + beta.value)


def exp_arith(kind: str, alpha: Exponent, d: int) -> Exponent:
    """Dispatch by name: add, subInt, mulInt, divide"""
    operations = {
        "add": add,
        "subInt": sub_int,
        "sub_int": sub_int,
        "mulInt": mul_int,
        "mul_int": mul_int,
        "divide": divide,
    }
    if kind not in operations:
        raise ValueError(f"unknown exponent operation: {kind}")
    return operations[kind](alpha, d)


def normalize_unary_bn(alpha: Exponent, n: int) -> Exponent:
    """Normal form of x^alpha over the pseudovariety defined by x^(w+n) = x^w"""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if alpha.is_finite:
        return alpha
    return Exponent.omega_plus(alpha.value % n)
