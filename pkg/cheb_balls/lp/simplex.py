"""Dense two-phase simplex method with Bland's rule.

Problems are small (tens of variables and rows), so the full tableau is
kept as a numpy array and every pivot is a rank-one update. Bland's rule
(lowest-index entering column, lowest-index leaving basic variable on
ratio ties) makes the method finite and deterministic: identical inputs
always yield the same vertex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Optional, Sequence

import numpy as np

from cheb_balls.errors import DimensionMismatchError, NumericalFailureError
from cheb_balls.utils import PIVOT_TOL, as_vector

Sense = Literal["<=", ">=", "=="]
Status = Literal["optimal", "unbounded", "infeasible"]

_SENSES = ("<=", ">=", "==")


class LpProblem:
    """Optimize c^T x subject to row constraints and sign bounds.

    Rows are A[i] x (sense_i) rhs_i with sense in {"<=", ">=", "=="}.
    Variables flagged free are unbounded, the others are >= 0.
    """

    def __init__(
        self,
        objective,
        rows=None,
        rhs=None,
        senses: Optional[Sequence[Sense]] = None,
        free=None,
        maximize: bool = True,
    ) -> None:
        self.objective = objective
        self.set_rows(rows, rhs, senses)
        self.free = free
        self.maximize = maximize

    def __str__(self) -> str:
        goal = "max" if self.maximize else "min"
        lines = [f"{goal} {self._c}"]
        for row, sense, rhs in zip(self._rows, self._senses, self._rhs):
            lines.append(f"  {row} {sense} {rhs:.6g}")

        return "\n".join(lines)

    @property
    def objective(self) -> np.ndarray:
        return self._c

    @objective.setter
    def objective(self, objective):
        self._c = as_vector(objective, "objective")

    @property
    def num_vars(self) -> int:
        return self._c.size

    @property
    def rows(self) -> np.ndarray:
        return self._rows

    @property
    def rhs(self) -> np.ndarray:
        return self._rhs

    @property
    def senses(self) -> list[str]:
        return list(self._senses)

    def set_rows(self, rows, rhs, senses) -> None:
        if rows is None:
            rows = np.zeros((0, self.num_vars))
            rhs = np.zeros(0)
        rows = np.array(rows, dtype=float).reshape(-1, self.num_vars)
        rhs = np.array(rhs, dtype=float).reshape(-1)

        if rows.shape[0] != rhs.size:
            raise DimensionMismatchError("Expect one rhs per row.")
        if not (np.all(np.isfinite(rows)) and np.all(np.isfinite(rhs))):
            raise ValueError("Non-finite LP data found.")

        if senses is None:
            senses = ["<="] * rhs.size
        senses = list(senses)
        if len(senses) != rhs.size:
            raise DimensionMismatchError("Expect one sense per row.")
        for sense in senses:
            if sense not in _SENSES:
                raise ValueError(f"Unknown row sense {sense!r}.")

        self._rows, self._rhs, self._senses = rows, rhs, senses

    @property
    def free(self) -> np.ndarray:
        """Boolean mask of free variables."""
        return self._free

    @free.setter
    def free(self, free):
        if free is None:
            free = np.zeros(self.num_vars, dtype=bool)
        elif free is True:
            free = np.ones(self.num_vars, dtype=bool)
        free = np.array(free, dtype=bool).reshape(-1)

        if free.size != self.num_vars:
            raise DimensionMismatchError("Expect one free flag per variable.")

        self._free = free

    @property
    def maximize(self) -> bool:
        return self._maximize

    @maximize.setter
    def maximize(self, maximize: bool):
        if not isinstance(maximize, bool):
            raise TypeError("Maximize should be boolean.")

        self._maximize = maximize

    def residual(self, x) -> float:
        """Largest violation of rows and sign bounds at x."""
        x = np.asarray(x, dtype=float)
        worst = 0.0

        lhs = self._rows @ x - self._rhs
        for value, sense in zip(lhs, self._senses):
            if sense == "<=":
                worst = max(worst, value)
            elif sense == ">=":
                worst = max(worst, -value)
            else:
                worst = max(worst, abs(value))

        bounded = ~self._free
        if np.any(bounded):
            worst = max(worst, float(np.max(-x[bounded], initial=0.0)))

        return float(worst)


@dataclass(frozen=True)
class LpOutcome:
    """Result of simplex.

    Attributes:
        status: "optimal", "unbounded" or "infeasible".
        x (np.ndarray, optional): optimal vertex.
        value (float): optimal value; +-inf if unbounded, nan if
            infeasible.
        duals (np.ndarray, optional): row multipliers with
            value = rhs^T duals; for a maximization with "<=" rows they
            are nonnegative.
        ray (np.ndarray, optional): improving recession direction when
            unbounded.
        pivots (int): pivots over both phases.
    """

    status: Status
    x: Optional[np.ndarray] = None
    value: float = math.nan
    duals: Optional[np.ndarray] = None
    ray: Optional[np.ndarray] = None
    pivots: int = 0

    @property
    def is_optimal(self) -> bool:
        return self.status == "optimal"


class _Tableau:
    """Tableau T = B^{-1} A, beta = B^{-1} b for a standard-form LP."""

    def __init__(self, A: np.ndarray, b: np.ndarray, basis: list[int]):
        self.T = A.copy()
        self.beta = b.copy()
        self.basis = list(basis)
        self.pivots = 0

    def pivot(self, row: int, col: int) -> None:
        piv = self.T[row, col]
        self.T[row] /= piv
        self.beta[row] /= piv

        factor = self.T[:, col].copy()
        factor[row] = 0.0
        self.T -= np.outer(factor, self.T[row])
        self.beta -= factor * self.beta[row]

        # roundoff can push zero-level basics slightly negative
        self.beta[(self.beta < 0) & (self.beta > -1e-11)] = 0.0

        self.basis[row] = col
        self.pivots += 1

    def reduced_costs(self, cost: np.ndarray) -> np.ndarray:
        return cost - cost[self.basis] @ self.T

    def run(
        self, cost: np.ndarray, allowed: np.ndarray, max_pivots: int
    ) -> tuple[str, Optional[int]]:
        """Bland iterations minimizing cost over allowed columns.

        Returns:
            tuple: ("optimal", None) or ("unbounded", entering column).
        """

        cost_tol = 1e-9 * max(1.0, float(np.max(np.abs(cost), initial=0.0)))

        while True:
            reduced = self.reduced_costs(cost)
            candidates = np.flatnonzero((reduced < -cost_tol) & allowed)
            if candidates.size == 0:
                return "optimal", None

            col = int(candidates[0])
            column = self.T[:, col]
            row_max = np.max(np.abs(self.T), axis=1, initial=0.0)
            eligible = np.flatnonzero(
                column > PIVOT_TOL * np.maximum(row_max, 1e-300)
            )
            if eligible.size == 0:
                return "unbounded", col

            ratios = self.beta[eligible] / column[eligible]
            best = ratios.min()
            ties = eligible[ratios <= best + 1e-12 * max(1.0, abs(best))]
            row = int(min(ties, key=lambda i: self.basis[i]))

            if self.pivots >= max_pivots:
                raise NumericalFailureError(
                    f"Simplex exceeded its pivot budget ({max_pivots})."
                )
            self.pivot(row, col)

    def drop_row(self, row: int) -> None:
        self.T = np.delete(self.T, row, axis=0)
        self.beta = np.delete(self.beta, row)
        del self.basis[row]


def simplex(problem: LpProblem, max_pivots: Optional[int] = None) -> LpOutcome:
    """Solve an LpProblem.

    Free variables are split as x = x+ - x-, so the returned point is a
    basic solution (a vertex whenever the feasible set has one; free
    variables that stay nonbasic are reported as 0).

    Raises:
        NumericalFailureError: pivot budget exhausted.
    """

    if not isinstance(problem, LpProblem):
        raise TypeError("Expect an LpProblem.")

    n, m = problem.num_vars, problem.rhs.size

    # standard-form columns: (original variable, sign)
    columns = []
    for j in range(n):
        columns.append((j, 1.0))
        if problem.free[j]:
            columns.append((j, -1.0))
    n_struct = len(columns)

    slack_of_row = {}
    for i, sense in enumerate(problem.senses):
        if sense != "==":
            slack_of_row[i] = n_struct + len(slack_of_row)
    n_cols = n_struct + len(slack_of_row)

    A = np.zeros((m, n_cols))
    for k, (j, sign) in enumerate(columns):
        A[:, k] = sign * problem.rows[:, j]
    for i, k in slack_of_row.items():
        A[i, k] = 1.0 if problem.senses[i] == "<=" else -1.0

    b = problem.rhs.copy()
    flip = np.where(b < 0, -1.0, 1.0)
    A *= flip[:, None]
    b *= flip

    c = np.zeros(n_cols)
    for k, (j, sign) in enumerate(columns):
        c[k] = sign * problem.objective[j]
    if problem.maximize:
        c = -c

    if max_pivots is None:
        max_pivots = 50 * (m + n_cols) + 100

    # initial basis: slacks with +1 after flipping, artificials elsewhere
    basis, artificial_rows = [], []
    for i in range(m):
        k = slack_of_row.get(i)
        if k is not None and A[i, k] > 0:
            basis.append(k)
        else:
            basis.append(-1)
            artificial_rows.append(i)

    n_art = len(artificial_rows)
    A_full = np.hstack([A, np.zeros((m, n_art))])
    for a, i in enumerate(artificial_rows):
        A_full[i, n_cols + a] = 1.0
        basis[i] = n_cols + a

    tableau = _Tableau(A_full, b, basis)
    rows_kept = list(range(m))

    if n_art:
        phase_one = np.zeros(n_cols + n_art)
        phase_one[n_cols:] = 1.0
        tableau.run(phase_one, np.ones(n_cols + n_art, bool), max_pivots)

        infeasibility = float(phase_one[tableau.basis] @ tableau.beta)
        if infeasibility > 1e-9 * max(1.0, float(np.max(b, initial=0.0))):
            return LpOutcome("infeasible", pivots=tableau.pivots)

        # drive zero-level artificials out, dropping redundant rows
        for row in reversed(range(len(tableau.basis))):
            if tableau.basis[row] < n_cols:
                continue
            entries = np.abs(tableau.T[row, :n_cols])
            if entries.size and entries.max() > PIVOT_TOL:
                tableau.pivot(row, int(np.argmax(entries > PIVOT_TOL)))
            else:
                tableau.drop_row(row)
                del rows_kept[row]

    allowed = np.zeros(n_cols + n_art, dtype=bool)
    allowed[:n_cols] = True
    cost = np.concatenate([c, np.zeros(n_art)])

    status, entering = tableau.run(cost, allowed, max_pivots)

    def to_original(std: np.ndarray) -> np.ndarray:
        x = np.zeros(n)
        for k, (j, sign) in enumerate(columns):
            x[j] += sign * std[k]
        return x

    if status == "unbounded":
        direction = np.zeros(n_cols + n_art)
        direction[entering] = 1.0
        direction[tableau.basis] = -tableau.T[:, entering]
        ray = to_original(direction[:n_struct])
        ray /= max(np.linalg.norm(ray), 1e-300)

        return LpOutcome(
            "unbounded",
            value=math.inf if problem.maximize else -math.inf,
            ray=ray,
            pivots=tableau.pivots,
        )

    std = np.zeros(n_cols + n_art)
    std[tableau.basis] = tableau.beta
    x = to_original(std[:n_struct])

    duals = np.zeros(m)
    if rows_kept:
        B = A_full[np.ix_(rows_kept, tableau.basis)]
        y = np.linalg.solve(B.T, cost[tableau.basis])
        sign = -1.0 if problem.maximize else 1.0
        duals[rows_kept] = sign * flip[rows_kept] * y

    return LpOutcome(
        "optimal",
        x=x,
        value=float(problem.objective @ x),
        duals=duals,
        pivots=tableau.pivots,
    )
