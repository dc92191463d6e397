"""Exception types shared across the package."""

from __future__ import annotations


class QHoweError(Exception):
    """Base class for all package errors."""


class QDivisionByZero(QHoweError, ZeroDivisionError):
    def __init__(self, message: str = "division by zero in ℚ(q)") -> None:
        super().__init__(message)


class PoleError(QHoweError, ValueError):
    def __init__(self, message: str = "pole at specialization") -> None:
        super().__init__(message)


class NotInvertibleError(QHoweError, ValueError):
    pass


class PreconditionError(QHoweError, ValueError):
    pass


class DecompositionError(QHoweError, ArithmeticError):
    """Raised when an exact linear solve is inconsistent (never expected)."""

    def __init__(self, message: str = "decomposition failure") -> None:
        super().__init__(message)


class ConsistencyError(QHoweError, AssertionError):
    """An internal cross-check failed; indicates a bug, not bad input."""
