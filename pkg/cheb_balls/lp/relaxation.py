"""Linear relaxation of UQ and its dual.

Replacing x^T x by a free scalar y gives

    (LP)   max  y - 2 a_0^T x
           s.t. y - 2 a_i^T x + b_i <= 0,   i = 1, ..., p

whose dual lives on the unit simplex:

    (DLP)  min  -sum_i b_i lambda_i
           s.t. sum_i lambda_i a_i = a_0,  sum_i lambda_i = 1,  lambda >= 0

(LP) is bounded exactly when a_0 lies in conv{a_1, ..., a_p}.
"""

from __future__ import annotations

import numpy as np

from cheb_balls.data import UqInstance
from cheb_balls.lp.simplex import LpOutcome, LpProblem, simplex


def lp_problem(uq: UqInstance) -> LpProblem:
    """(LP) over variables (x_1, ..., x_n, y), all free."""
    n, p = uq.dim, len(uq)

    objective = np.append(-2.0 * uq.a0, 1.0)
    rows = np.hstack([-2.0 * uq.a, np.ones((p, 1))])

    return LpProblem(objective, rows, -uq.b, ["<="] * p, free=True)


def dlp_problem(uq: UqInstance) -> LpProblem:
    """(DLP) over lambda >= 0 (as a minimization)."""
    rows = np.vstack([uq.a.T, np.ones((1, len(uq)))])
    rhs = np.append(uq.a0, 1.0)

    return LpProblem(
        -uq.b, rows, rhs, ["=="] * rhs.size, free=None, maximize=False
    )


def uq_lp(uq: UqInstance) -> LpOutcome:
    """Solve (LP); the optimal vertex is (x*, y*) = (x[:-1], x[-1])."""
    return simplex(lp_problem(uq))


def uq_dlp(uq: UqInstance) -> LpOutcome:
    """Solve (DLP); infeasible exactly when (LP) is unbounded."""
    return simplex(dlp_problem(uq))


def lp_point(outcome: LpOutcome) -> tuple[np.ndarray, float]:
    """Split an optimal (LP) vertex into (x*, y*)."""
    if not outcome.is_optimal:
        raise ValueError(f"No LP point for status {outcome.status!r}.")

    return outcome.x[:-1].copy(), float(outcome.x[-1])
