"""Shared paths and default tolerances."""

from pathlib import Path

import numpy as np

PROJECT_ROOT = Path(__file__).parent.parent

# Relative feasibility tolerance, scaled by max(1, |b_i|)
FEAS_TOL = 1e-9

# Enumeration candidates sit exactly on constraint boundaries
CANDIDATE_TOL = 1e-8

# Interior is certified by gamma < 1 - INTERIOR_MARGIN
INTERIOR_MARGIN = 1e-7

# Upper limit on the number of active sets enumerated by solve_exact
ENUM_BUDGET = 10**7

PIVOT_TOL = 1e-10

SQP_GAP_TOL = 1e-10


def constraint_scale(b) -> np.ndarray:
    """Scale for relative feasibility tests: max(1, |b_i|)."""
    return np.maximum(1.0, np.abs(np.asarray(b, dtype=float)))


def as_vector(vector, name: str = "vector") -> np.ndarray:
    """Convert to a 1-D float array with finite entries."""
    try:
        arr = np.array(vector, dtype=float)
    except (TypeError, ValueError) as exc:
        raise TypeError(f"Expect {name} as a sequence of reals.") from exc

    if arr.ndim != 1:
        raise ValueError(f"Expect {name} as a 1-D vector.")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"Non-finite entry found in {name}.")

    return arr
