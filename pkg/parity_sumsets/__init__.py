"""Odd-multiplicity sumsets and productsets through GF(2) polynomials."""

from importlib.metadata import PackageNotFoundError, version

from .errors import (
    BudgetExceededError,
    ExponentOverflowError,
    InvalidInputError,
    OracleMismatchError,
    ParitySumsetsError,
    TheoremViolationError,
)
from .models import GridSet, Instance, IntSet
from .setops import nabla, nabla_many, oplus, oplus_grid, oplus_many, symdiff

try:
    __version__ = version("parity-sumsets")
except PackageNotFoundError:
    __version__ = "0.0.0"

__all__ = [
    "BudgetExceededError",
    "ExponentOverflowError",
    "GridSet",
    "Instance",
    "IntSet",
    "InvalidInputError",
    "OracleMismatchError",
    "ParitySumsetsError",
    "TheoremViolationError",
    "__version__",
    "nabla",
    "nabla_many",
    "oplus",
    "oplus_grid",
    "oplus_many",
    "symdiff",
]
