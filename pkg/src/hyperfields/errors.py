"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes, so the distinctions matter:
usage/domain problems, capacity limits, malformed tables, and genuine
axiom failures are different outcomes.
"""

from __future__ import annotations


class HyperfieldError(Exception):
    """Base class for every error raised by this package."""


class DomainError(HyperfieldError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class CapacityError(HyperfieldError, ValueError):
    """An argument exceeds the supported desk-scale bounds."""


class StructuralError(HyperfieldError, ValueError):
    """A table is malformed: wrong shape, out-of-range entry, empty cell."""


class PreconditionError(HyperfieldError, TypeError):
    """An operation requiring a verified hyperfield got something else."""


class AxiomViolationError(HyperfieldError, ValueError):
    """A candidate failed verification; carries the offending report."""

    def __init__(self, message: str, report=None, candidates=None):
        super().__init__(message)
        self.report = report
        self.candidates = candidates


class ConstructionError(HyperfieldError, RuntimeError):
    """A construction produced a table that fails verification."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class BudgetExceededError(HyperfieldError, RuntimeError):
    """An enumeration ran past its wall-clock budget; carries progress."""

    def __init__(self, message: str, scanned: int = 0, survivors: int = 0):
        super().__init__(message)
        self.scanned = scanned
        self.survivors = survivors
