"""Shared exception types.

Every failure mode that the CLI maps to a distinct exit code lives here so
library callers can catch them without importing half the package.
"""


class InputError(ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class PrecisionExhausted(RuntimeError):
    """A certified decision could not be reached before max_digits (exit 3)."""


class BudgetExceeded(RuntimeError):
    """A combinatorial or degree budget was exceeded (exit 4)."""


class BoundaryTie(BudgetExceeded):
    """An enumeration candidate sits exactly on the height boundary and the
    boundary value is not decidable by the exact routes we implement."""


class ReducibleError(InputError):
    """A defining polynomial turned out to be reducible; carries a factor."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor
