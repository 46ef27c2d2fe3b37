"""Exceptions raised by the parity sumsets toolkit."""

from __future__ import annotations

from .const import (
    EXIT_BUDGET,
    EXIT_INPUT_ERROR,
    EXIT_OVERFLOW,
    EXIT_VIOLATION,
)


class ParitySumsetsError(Exception):
    """Base class; ``exit_code`` is what the CLI exits with."""

    exit_code: int = EXIT_INPUT_ERROR


class InvalidInputError(ParitySumsetsError, ValueError):
    """Malformed literal or violated precondition."""

    exit_code = EXIT_INPUT_ERROR


class ExponentOverflowError(ParitySumsetsError, OverflowError):
    """An exponent or a count left its representable range."""

    exit_code = EXIT_OVERFLOW


class BudgetExceededError(ParitySumsetsError):
    """Enumeration or memory budget exceeded."""

    exit_code = EXIT_BUDGET


class OracleMismatchError(ParitySumsetsError):
    """Polynomial path and counting oracle disagree."""

    exit_code = EXIT_VIOLATION


class TheoremViolationError(ParitySumsetsError):
    """A residue class came up short of the proven bound."""

    exit_code = EXIT_VIOLATION
