"""Exception taxonomy shared across the package.

Validation failures (bad arguments, malformed graphs, impossible requests)
map to CLI exit code 1; numerical non-convergence maps to exit code 2.
"""

from __future__ import annotations


class ValidationError(ValueError):
    """Input violates a documented precondition."""


class NoPerfectMatchingError(ValidationError):
    """Raised when a perfect matching was requested but none exists.

    Carries the maximum matching found so callers can report how far
    the search got.
    """

    def __init__(self, message, maximum_matching):
        super().__init__(message)
        self.maximum_matching = maximum_matching


class ConvergenceError(RuntimeError):
    """An iterative eigensolve failed to reach the requested residual."""
