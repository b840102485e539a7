"""Chebyshev center by the ellipsoid method with exact inner maximization.

f(z) = max_{x in Omega} ||x - z||^2 is convex with subgradient
2 (z - x*(z)), x*(z) the exact inner maximizer. The center lies in every
ball, so the search runs over Q = the smallest ball (a_1, r_1), where f
is Lipschitz with M = 4 (||a_1|| + r_1).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Any, Literal, Optional

import numpy as np
import pandas as pd

from cheb_balls.core import (
    bisection_minimize,
    ellipsoid_iterations,
    ellipsoid_minimize,
    inner_uq,
)
from cheb_balls.core.ellipsoid import bisection_iterations
from cheb_balls.data import CcbInstance
from cheb_balls.errors import IterationLimitWarning
from cheb_balls.uq import UqSolution, solve_exact
from cheb_balls.utils import ENUM_BUDGET, as_vector

Method = Literal["sqp", "ellipsoid", "planar"]


@dataclass
class CcbSolution:
    """A center z with its squared covering radius max ||x - z||^2.

    Attributes:
        certificate: RatioCertificate for sqp, an accuracy bound dict for
            ellipsoid, a description dict for planar.
        trace (pd.DataFrame, optional): per-step ellipsoid log.
    """

    center: np.ndarray
    squared_radius: float
    method: Method
    certificate: Any = None
    iterations: int = 0
    converged: bool = True
    trace: Optional[pd.DataFrame] = field(default=None, repr=False)

    def __str__(self) -> str:
        return (
            f"CcbSolution({self.method}: center={self.center}, "
            f"squared_radius={self.squared_radius:.10g})"
        )

    def certificate_dict(self) -> dict:
        if self.certificate is None:
            return {}
        if hasattr(self.certificate, "to_dict"):
            return self.certificate.to_dict()
        return dict(self.certificate)


def inner_solution(
    inst: CcbInstance, z, budget: int = ENUM_BUDGET
) -> UqSolution:
    """Exact solution of max_{x in Omega} ||x - z||^2 - ||z||^2."""
    return solve_exact(inner_uq(inst, z), budget=budget)


def evaluate_center(inst: CcbInstance, z, budget: int = ENUM_BUDGET) -> float:
    """max_{x in Omega} ||x - z||^2."""
    z = as_vector(z, "z")

    return inner_solution(inst, z, budget).value + float(z @ z)


def ccb_subgradient(
    inst: CcbInstance, z, budget: int = ENUM_BUDGET
) -> np.ndarray:
    """2 (z - x*(z)) with the deterministic inner argmax."""
    z = as_vector(z, "z")

    return 2.0 * (z - inner_solution(inst, z, budget).x)


def solve_ccb_ellipsoid(
    inst: CcbInstance,
    eps: float = 1e-5,
    max_iter: Optional[int] = None,
    budget: int = ENUM_BUDGET,
    record_trace: bool = False,
) -> CcbSolution:
    """Chebyshev center to accuracy eps in the squared radius.

    Runs ceil(2 (n+1)^2 ln(4 (||a_1|| + r_1) r_1 / eps)) ellipsoid steps
    (bisection halvings when n = 1).

    Warns:
        IterationLimitWarning: if max_iter is below the required count;
            the best iterate so far is returned with converged=False.
    """

    radii = inst.radii
    q = int(np.argsort(radii, kind="stable")[0])
    a1, r1 = inst.centers[q], float(radii[q])
    n = inst.dim
    lipschitz = 4.0 * (float(np.linalg.norm(a1)) + r1)

    def objective(z):
        sol = inner_solution(inst, z, budget)
        return sol.value + float(z @ z), 2.0 * (z - sol.x)

    if n == 1:
        required = bisection_iterations(lipschitz, 2.0 * r1, eps)
    else:
        required = ellipsoid_iterations(n, lipschitz, r1, r1, eps)

    steps = required
    if max_iter is not None and max_iter < required:
        warnings.warn(
            f"Iteration limit {max_iter} below the {required} steps "
            "needed for the requested accuracy.",
            IterationLimitWarning,
        )
        steps = max_iter

    if n == 1:
        state = bisection_minimize(
            objective, a1[0] - r1, a1[0] + r1, steps, record_trace
        )
        bound = lipschitz * 2.0 * r1 * 0.5**state.k
    else:

        def domain_cut(y):
            gap = y - a1
            return 2.0 * gap if gap @ gap > r1 * r1 else None

        state = ellipsoid_minimize(
            objective, a1, r1, steps, domain_cut, record_trace
        )
        bound = lipschitz * r1 * math.exp(-state.k / (2.0 * (n + 1) ** 2))

    assert state.best_point is not None, "Internal error: no feasible step"

    converged = state.stopped_early or steps >= required
    if state.stopped_early:
        bound = 0.0

    return CcbSolution(
        center=state.best_point,
        squared_radius=state.best_value,
        method="ellipsoid",
        certificate={
            "eps": eps,
            "gap_bound": min(bound, eps) if converged else bound,
            "required_steps": required,
        },
        iterations=state.k,
        converged=converged,
        trace=state.trace() if record_trace else None,
    )
