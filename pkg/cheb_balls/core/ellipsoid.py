"""Ellipsoid method for nonsmooth convex minimization.

The iterate y_k is the center of the ellipsoid
{y : (y - y_k)^T H_k^{-1} (y - y_k) <= 1}. Each step cuts it with a
subgradient g_k and keeps the minimum-volume ellipsoid containing the
remaining half:

    y_{k+1} = y_k - 1/(n+1) * H_k g_k / sqrt(g_k^T H_k g_k)
    H_{k+1} = n^2/(n^2-1) * (H_k - 2/(n+1) * H_k g_k g_k^T H_k
                                   / (g_k^T H_k g_k))

Points outside the feasible set Q are cut with a separating subgradient
of Q instead of the objective's. If Q contains a ball of radius rho,
H_0 = R^2 I, and the objective is M-Lipschitz on Q, then after k steps
the best feasible value is within M R^2 / rho * exp(-k / (2(n+1)^2)) of
the optimum. In one dimension the update degenerates and bisection on
the subgradient sign is used instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
import pandas as pd
from scipy.linalg import LinAlgError, cholesky

# objective(y) -> (value, subgradient)
Oracle = Callable[[np.ndarray], "tuple[float, np.ndarray]"]

# cut(y) -> None if y in Q, otherwise a subgradient separating y from Q
DomainCut = Callable[[np.ndarray], Optional[np.ndarray]]


@dataclass
class EllipsoidState:
    """State of an ellipsoid (or bisection) run.

    Attributes:
        y (np.ndarray): current center y_k.
        H (np.ndarray): current shape matrix H_k.
        k (int): number of completed steps.
        best_point (np.ndarray, optional): best feasible iterate so far.
        best_value (float): objective at best_point (inf if none yet).
        stopped_early (bool): stopped before the requested steps because
            the cut vanished (optimum hit) or the ellipsoid collapsed.
    """

    y: np.ndarray
    H: np.ndarray
    k: int = 0
    best_point: Optional[np.ndarray] = None
    best_value: float = math.inf
    stopped_early: bool = False
    history: list = field(default_factory=list, repr=False)

    def offer(self, point: np.ndarray, value: float) -> None:
        """Record a feasible evaluation, keeping the first best."""
        if value < self.best_value:
            self.best_value = float(value)
            self.best_point = np.array(point, dtype=float)

    def is_positive_definite(self) -> bool:
        try:
            cholesky(self.H, lower=True)
        except LinAlgError:
            return False

        return True

    def trace(self) -> pd.DataFrame:
        """Per-step log: k, point_value (NaN when cut by Q), best_value,
        feasible.
        """

        return pd.DataFrame(
            self.history,
            columns=["k", "point_value", "best_value", "feasible"],
        )


def ellipsoid_iterations(
    dim: int, lipschitz: float, radius: float, rho: float, eps: float
) -> int:
    """Steps guaranteeing an eps-accurate best value:
    ceil(2 (n+1)^2 ln(M R^2 / (rho eps))), at least one.
    """

    if eps <= 0:
        raise ValueError("eps should be positive.")

    ratio = lipschitz * radius**2 / (rho * eps)
    if ratio <= 1.0:
        return 1

    return max(1, math.ceil(2 * (dim + 1) ** 2 * math.log(ratio)))


def bisection_iterations(lipschitz: float, width: float, eps: float) -> int:
    """Halvings needed until M * width <= eps, at least one."""
    if eps <= 0:
        raise ValueError("eps should be positive.")

    ratio = lipschitz * width / eps
    if ratio <= 1.0:
        return 1

    return max(1, math.ceil(math.log2(ratio)))


def ellipsoid_minimize(
    objective: Oracle,
    center,
    radius: float,
    n_iter: int,
    domain_cut: Optional[DomainCut] = None,
    record: bool = False,
) -> EllipsoidState:
    """Run n_iter ellipsoid steps from the ball (center, radius).

    Args:
        objective: returns (value, subgradient) at a point of Q.
        center (array-like): initial center y_0.
        radius (float): initial radius R, H_0 = R^2 I.
        n_iter (int): number of steps.
        domain_cut: separation oracle of Q; None means Q is everything.
        record (bool): keep a per-step history for EllipsoidState.trace.

    Returns:
        EllipsoidState: final state with the best feasible iterate.
    """

    y = np.array(center, dtype=float)
    n = y.size
    if n < 2:
        raise ValueError("Ellipsoid update needs dim >= 2, use bisection.")
    if radius <= 0:
        raise ValueError("Initial radius should be positive.")

    state = EllipsoidState(y=y, H=radius**2 * np.eye(n))
    expand = n**2 / (n**2 - 1.0)

    for _ in range(n_iter):
        cut = None if domain_cut is None else domain_cut(state.y)
        feasible = cut is None

        if feasible:
            value, g = objective(state.y)
            state.offer(state.y, value)
        else:
            value, g = math.nan, np.asarray(cut, dtype=float)

        if record:
            state.history.append(
                (state.k, value, state.best_value, feasible)
            )

        Hg = state.H @ g
        gHg = float(g @ Hg)
        if gHg <= 1e-300 or not np.isfinite(gHg):
            # zero subgradient at a feasible point is optimal
            state.stopped_early = True
            break

        state.y = state.y - Hg / ((n + 1) * math.sqrt(gHg))
        H = expand * (state.H - (2.0 / (n + 1)) * np.outer(Hg, Hg) / gHg)
        state.H = 0.5 * (H + H.T)
        state.k += 1

    return state


def bisection_minimize(
    objective: Oracle,
    lower: float,
    upper: float,
    n_iter: int,
    record: bool = False,
) -> EllipsoidState:
    """One-dimensional counterpart of ellipsoid_minimize on [lower, upper].

    The interval plays the ellipsoid: y is its midpoint and H its squared
    half-width.
    """

    if upper < lower:
        raise ValueError("Expect lower <= upper.")

    lo, hi = float(lower), float(upper)
    state = EllipsoidState(
        y=np.array([0.5 * (lo + hi)]), H=np.array([[(0.5 * (hi - lo)) ** 2]])
    )

    for end in (lo, hi):
        value, _ = objective(np.array([end]))
        state.offer(np.array([end]), value)

    for _ in range(n_iter):
        mid = 0.5 * (lo + hi)
        value, g = objective(np.array([mid]))
        state.offer(np.array([mid]), value)

        if record:
            state.history.append((state.k, value, state.best_value, True))

        slope = float(np.asarray(g).ravel()[0])
        if slope > 0:
            hi = mid
        elif slope < 0:
            lo = mid
        else:
            state.stopped_early = True
            break

        state.k += 1
        state.y = np.array([0.5 * (lo + hi)])
        state.H = np.array([[(0.5 * (hi - lo)) ** 2]])

    return state
