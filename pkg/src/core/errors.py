"""
Domain exceptions for tverberg-lab.
Input problems subclass ValueError so callers that already handle
ValueError (the CLI, pydantic validators) keep working.
"""
from typing import Any, Optional


class TverbergInputError(ValueError):
    """Malformed or inconsistent input: bad indices, shapes, parameters."""


class DSLParseError(TverbergInputError):
    """Subcomplex expression could not be parsed."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class EnumerationCapError(RuntimeError):
    """Exhaustive enumeration refused because the instance exceeds the cap."""

    def __init__(self, message: str, cap: int):
        self.cap = cap
        super().__init__(message)


class SolverInvariantError(RuntimeError):
    """A reduction produced a witness that fails exact re-verification."""


class TheoremViolationError(RuntimeError):
    """A theorem-backed existence instance failed one of its trials."""

    def __init__(self, message: str, report: Optional[Any] = None):
        self.report = report
        super().__init__(message)
