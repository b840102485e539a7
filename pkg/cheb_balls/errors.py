"""Exceptions and warning categories raised by cheb_balls."""

from __future__ import annotations

from typing import Any, Optional


class ChebBallsError(Exception):
    """Base class for all cheb_balls errors."""


class DimensionMismatchError(ChebBallsError, ValueError):
    """Vectors or balls of inconsistent dimension."""


class DimensionError(DimensionMismatchError):
    """Operation not defined in the given dimension."""


class EmptyInteriorError(ChebBallsError, ValueError):
    """Intersection of balls has no (certified) interior point."""


class NotInteriorError(ChebBallsError, ValueError):
    """Point is not strictly feasible."""


class PreconditionViolatedError(ChebBallsError, ValueError):
    """Input does not satisfy the precondition of an algorithm."""


class BudgetExceededError(ChebBallsError, RuntimeError):
    """Enumeration would exceed the configured work budget."""


class NumericalFailureError(ChebBallsError, RuntimeError):
    """A numerical routine failed to terminate cleanly."""


class NoCandidateError(ChebBallsError, RuntimeError):
    """Enumeration found no feasible candidate."""


class IterationLimitError(ChebBallsError, RuntimeError):
    """Iterative solver stopped before reaching its tolerance.

    Attributes:
        result: best result reached before stopping.
    """

    def __init__(self, message: str, result: Optional[Any] = None) -> None:
        super().__init__(message)
        self.result = result


class GammaNotBelowOneWarning(UserWarning):
    """No source of gamma gives a value below one."""


class IterationLimitWarning(UserWarning):
    """Iteration limit reached, best-so-far returned."""


class ConvergenceWarning(UserWarning):
    """A solver result failed post-verification and was replaced."""
