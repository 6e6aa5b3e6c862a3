"""
Exception hierarchy for smansec.

Every error a caller can trigger is a ``ValueError`` subclass carrying the
process exit code the command-line surface reports for it. Library code
raises these directly; the command runner turns them into failing reports.
"""

from typing import Any, List, Optional


class SmanError(ValueError):
    """Base class for all smansec errors."""

    exit_code = 1


class UsageError(SmanError):
    """Bad arguments: out-of-range indices, mismatched fields or shapes, budgets."""

    exit_code = 2


class ParseError(UsageError):
    """Malformed input file. ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class FieldDomainError(UsageError):
    """Arithmetic outside the field's domain (inversion of zero)."""


class AmbiguousDecodeError(UsageError):
    """Several messages tie at the minimum Hamming distance."""

    def __init__(self, message: str, candidates: List[Any], distance: int):
        super().__init__(message)
        self.candidates = candidates
        self.distance = distance


class InfeasibleError(SmanError):
    """A topology precondition does not hold. ``verdict`` carries the witness."""

    exit_code = 3

    def __init__(self, message: str, verdict: Optional[Any] = None):
        super().__init__(message)
        self.verdict = verdict


class RetryExhaustedError(SmanError):
    """The randomized construction used up its attempts."""

    exit_code = 4

    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts


class ConsistencyError(SmanError):
    """Two independent computations of the same quantity disagree."""

    exit_code = 5
