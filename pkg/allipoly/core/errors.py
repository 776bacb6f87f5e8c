"""
Exception hierarchy shared by all allipoly services.

The CLI maps these to exit codes: guard violations exit with 2, every other
AlliPolyError exits with 1.
"""

from typing import Optional


class AlliPolyError(Exception):
    """Base exception for allipoly errors."""
    pass


class GraphError(AlliPolyError):
    """Exception raised when a graph or vertex set is invalid."""
    pass


class GraphFormatError(GraphError):
    """Exception raised when edge-list or graph6 text cannot be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class GuardExceededError(AlliPolyError):
    """Exception raised when an exponential algorithm is asked for too large an input."""

    def __init__(self, what: str, actual: int, limit: int) -> None:
        self.what = what
        self.actual = actual
        self.limit = limit
        super().__init__(
            f"{what} {actual} exceeds the guard of {limit}; pass an explicit override to proceed"
        )


class PolynomialError(AlliPolyError):
    """Exception raised for invalid polynomial arguments or parameters."""
    pass


class CatalogError(AlliPolyError):
    """Exception raised when a census catalog cannot be read or written."""

    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
