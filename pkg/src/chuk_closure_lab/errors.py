# src/chuk_closure_lab/errors.py
"""
Closure lab error classes.

Every failure raised deliberately by the library derives from ClosureLabError,
so callers (the CLI in particular) can catch one type.
"""

from typing import Optional


class ClosureLabError(Exception):
    """Base exception for all closure lab errors"""

    pass


class BudgetExceededError(ClosureLabError):
    """Raised when a computation would exceed a configured budget"""

    pass


class RegexSyntaxError(ClosureLabError):
    """Raised when a regular expression cannot be parsed"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class TermSyntaxError(ClosureLabError):
    """Raised when a kappa-term cannot be parsed"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class AlphabetError(ClosureLabError):
    """Raised when a letter is outside the declared alphabet"""

    pass


class EmptyWordError(ClosureLabError):
    """Raised when a nonempty word is required"""

    pass


class EmptyTermError(ClosureLabError):
    """Raised when a nonempty term is required"""

    pass


class ExpansionUnderflowError(ClosureLabError):
    """Raised when n! + k < 1 for some exponent omega+k of an expanded term"""

    pass


class ExponentRangeError(ClosureLabError):
    """Raised when an omega offset leaves the supported range"""

    pass


class NotDivisibleError(ClosureLabError):
    """Raised when an exponent has no quotient by the requested integer"""

    pass


class InvalidHistoryError(ClosureLabError):
    """Raised when a factorization history does not fit the term it is read against"""

    pass


class UnsupportedClassificationError(ClosureLabError):
    """Raised when sampled exponent coordinates fall outside the supported cases"""

    pass


class VerificationFailedError(ClosureLabError):
    """Raised when a constructed object fails its recognizer re-check"""

    pass


class ShapeError(ClosureLabError):
    """Raised when a term does not have the layered shape an operation requires"""

    pass


class PreconditionViolatedError(ClosureLabError):
    """Raised when a path transformation's side condition does not hold"""

    def __init__(self, condition: str, detail: Optional[str] = None):
        message = f"precondition violated: {condition}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
        self.condition = condition


class EmptyLanguageError(ClosureLabError):
    """Raised when an operation needs a nonempty language"""

    pass


class TableFormatError(ClosureLabError):
    """Raised for malformed semigroup table files"""

    pass
