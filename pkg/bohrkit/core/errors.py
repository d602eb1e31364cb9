"""
BOHRKIT Error Classes

Error hierarchy for the BOHRKIT library and CLI.
All custom exceptions inherit from BohrkitError.
"""

from typing import Any, List, Optional


class BohrkitError(Exception):
    """Base exception for all bohrkit errors."""

    exit_code = 1

    def __init__(
        self,
        message: str,
        code: Optional[str] = None,
        suggestions: Optional[List[str]] = None
    ):
        super().__init__(message)
        self.message = message
        self.code = code or "BOHRKIT_ERROR"
        self.suggestions = suggestions or []

    def to_user_message(self) -> str:
        """Format error message for user display."""
        msg = f"Error [{self.code}]: {self.message}"
        if self.suggestions:
            msg += "\n\nSuggestions:"
            for suggestion in self.suggestions:
                msg += f"\n   • {suggestion}"
        return msg

    def __str__(self) -> str:
        return self.message


class ValidationError(BohrkitError):
    """Rejected input: a value outside the domain of an operation."""

    exit_code = 2

    def __init__(self, message: str, field: Optional[str] = None, code: str = "VALIDATION_ERROR"):
        suggestions = ["Check the input value and try again"]
        if field:
            suggestions.insert(0, f"Invalid value for '{field}'")
        super().__init__(message, code=code, suggestions=suggestions)
        self.field = field


class DimensionError(ValidationError):
    """Matrix or series operands of incompatible dimension."""

    def __init__(self, message: str, left: int, right: int):
        super().__init__(message, field="dim", code="DIMENSION_ERROR")
        self.left = left
        self.right = right


class PreconditionError(BohrkitError):
    """A mathematical precondition of a result does not hold."""

    exit_code = 2

    def __init__(self, message: str, **values: Any):
        suggestions = [f"{name} = {value!r}" for name, value in values.items()]
        super().__init__(message, code="PRECONDITION_ERROR", suggestions=suggestions)
        self.values = values


class ConvergenceError(BohrkitError):
    """An iterative method hit its iteration cap."""

    exit_code = 3

    def __init__(self, message: str, last_iterate: Any = None, iterations: int = 0):
        suggestions = [
            "Loosen the tolerance (--tol or 'numerics.tol')"
        ]
        super().__init__(message, code="CONVERGENCE_ERROR", suggestions=suggestions)
        self.last_iterate = last_iterate
        self.iterations = iterations


class ConfigurationError(BohrkitError):
    """Configuration file or settings errors."""

    exit_code = 2

    def __init__(self, message: str, suggestions: Optional[List[str]] = None):
        default_suggestions = [
            "Check your configuration file at ~/.bohrkit/config.json",
            "Run 'bohrkit config reset --all' to restore defaults"
        ]
        super().__init__(
            message,
            code="CONFIG_ERROR",
            suggestions=suggestions or default_suggestions
        )


class ReportError(BohrkitError):
    """Report files could not be written."""

    def __init__(self, message: str, path: Optional[str] = None):
        suggestions = ["Check that the output directory is writable"]
        if path:
            suggestions.append(f"Check path: {path}")
        super().__init__(message, code="REPORT_ERROR", suggestions=suggestions)
