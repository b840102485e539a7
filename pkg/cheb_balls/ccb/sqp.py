"""Approximate Chebyshev center from the simplex-constrained dual.

The dual of the SDP relaxation of the center problem is the convex
quadratic program over the unit simplex

    min_lambda  q(lambda) = sum_i lambda_i (r_i^2 - ||a_i||^2)
                            + ||sum_i lambda_i a_i||^2,

and z = sum_i lambda_i a_i is the approximate center. It is solved by
Frank-Wolfe with away steps and exact line search.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Optional

import numpy as np

from cheb_balls.ccb.center import CcbSolution, evaluate_center
from cheb_balls.core import find_interior_point, inner_uq
from cheb_balls.data import CcbInstance
from cheb_balls.errors import (
    ConvergenceWarning,
    GammaNotBelowOneWarning,
    IterationLimitError,
)
from cheb_balls.lp import uq_lp
from cheb_balls.utils import ENUM_BUDGET, INTERIOR_MARGIN, SQP_GAP_TOL

GammaSource = Literal["cheb_optimal", "dmax_bound", "none"]


@dataclass(frozen=True)
class SqpResult:
    """Dual weights, the recovered center and v(SQP).

    Attributes:
        lambda_ (np.ndarray): weights on the unit simplex.
        z_bar (np.ndarray): sum_i lambda_i a_i.
        value (float): v(SQP) = q(lambda).
        stationarity_gap (float): final Frank-Wolfe gap.
        iterations (int): Frank-Wolfe steps taken.
    """

    lambda_: np.ndarray
    z_bar: np.ndarray
    value: float
    stationarity_gap: float
    iterations: int = 0


@dataclass(frozen=True)
class RatioCertificate:
    """ratio * v(SQP) <= v(CC_B) <= achieved <= v(SQP)."""

    gamma: float
    ratio: float
    gamma_source: GammaSource
    lower: float
    achieved: float
    upper: float

    @property
    def gamma_below_one(self) -> bool:
        return self.gamma_source != "none"

    def to_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "ratio": self.ratio,
            "gamma_source": self.gamma_source,
            "lower": self.lower,
            "achieved": self.achieved,
            "upper": self.upper,
        }


def _objective_terms(inst: CcbInstance) -> tuple[np.ndarray, np.ndarray]:
    centers = inst.centers
    return centers, inst.radii**2 - np.sum(centers**2, axis=1)


def solve_sqp(
    inst: CcbInstance,
    gap_tol: float = SQP_GAP_TOL,
    max_iter: Optional[int] = None,
) -> SqpResult:
    """Minimize q over the unit simplex.

    Starts from the vertex of the smallest ball (lowest index on ties).
    max_iter defaults to 100000 steps.

    Raises:
        IterationLimitError: after max_iter steps; carries the last
            iterate as ``result``.
    """

    centers, linear = _objective_terms(inst)
    p = len(inst)

    lam = np.zeros(p)
    lam[int(np.argmin(inst.radii))] = 1.0

    limit = 100_000 if max_iter is None else max_iter
    gap = math.inf
    k = 0
    while True:
        w = centers.T @ lam
        grad = linear + 2.0 * (centers @ w)
        current = float(grad @ lam)

        fw = int(np.argmin(grad))
        gap = current - float(grad[fw])
        if gap <= gap_tol:
            break

        if k >= limit:
            raise IterationLimitError(
                f"Frank-Wolfe stopped after {limit} steps with gap "
                f"{gap:.3e}.",
                result=_result(centers, linear, lam, gap, k),
            )
        k += 1

        active = np.flatnonzero(lam > 0)
        away = int(active[np.argmax(grad[active])])
        away_gap = float(grad[away]) - current

        if gap >= away_gap:
            direction = -lam.copy()
            direction[fw] += 1.0
            step_max = 1.0
        else:
            direction = lam.copy()
            direction[away] -= 1.0
            step_max = lam[away] / (1.0 - lam[away])

        slope = float(grad @ direction)
        moved = centers.T @ direction
        curvature = float(moved @ moved)
        if curvature > 0:
            step = min(step_max, -slope / (2.0 * curvature))
        else:
            step = step_max

        lam = lam + step * direction
        if step == step_max and gap < away_gap:
            lam[away] = 0.0
        lam = np.maximum(lam, 0.0)
        lam /= lam.sum()

    return _result(centers, linear, lam, gap, k)


def _result(centers, linear, lam, gap, k) -> SqpResult:
    z_bar = centers.T @ lam
    value = float(linear @ lam) + float(z_bar @ z_bar)

    return SqpResult(
        lambda_=lam,
        z_bar=z_bar,
        value=value,
        stationarity_gap=float(gap),
        iterations=k,
    )


def max_center_distance(inst: CcbInstance) -> float:
    """max_{i<j} ||a_i - a_j||, 0 for a single ball."""
    centers = inst.centers
    d_max = 0.0
    for i, j in combinations(range(len(inst)), 2):
        d_max = max(d_max, float(np.linalg.norm(centers[i] - centers[j])))

    return d_max


def approximation_gamma(inst: CcbInstance) -> tuple[float, GammaSource]:
    """Smallest of the two gamma bounds that is below one.

    Candidates are the minimax scaled distance of the Chebyshev-optimal
    interior point and d_max / (sqrt(2) r_min); the first wins ties.
    """

    candidates = [
        (find_interior_point(inst).gamma, "cheb_optimal"),
        (
            max_center_distance(inst) / (math.sqrt(2.0) * inst.radii.min()),
            "dmax_bound",
        ),
    ]
    below = [c for c in candidates if c[0] < 1.0 - INTERIOR_MARGIN]
    if not below:
        return min(c[0] for c in candidates), "none"

    return min(below, key=lambda c: c[0])


def sqp_certificate(
    inst: CcbInstance,
    sqp: Optional[SqpResult] = None,
    budget: int = ENUM_BUDGET,
) -> RatioCertificate:
    """Sandwich ratio * v(SQP) <= achieved <= v(SQP) for z_bar.

    Warns:
        GammaNotBelowOneWarning: no gamma bound below one; ratio is 0.
        ConvergenceWarning: the sandwich fails beyond tolerance.
    """

    sqp = sqp or solve_sqp(inst)
    gamma, source = approximation_gamma(inst)

    if source == "none":
        warnings.warn(
            f"No gamma bound below one (best {gamma:.6g}); "
            "the ratio certificate is vacuous.",
            GammaNotBelowOneWarning,
        )
        ratio = 0.0
    else:
        ratio = ((1.0 - gamma) / (math.sqrt(2.0) + gamma)) ** 2

    achieved = evaluate_center(inst, sqp.z_bar, budget)
    lower = ratio * sqp.value
    tol = 1e-7 * max(1.0, abs(sqp.value))
    if not lower - tol <= achieved <= sqp.value + tol:
        warnings.warn(
            f"Sandwich violated: {lower:.10g} <= {achieved:.10g} <= "
            f"{sqp.value:.10g} fails.",
            ConvergenceWarning,
        )

    return RatioCertificate(
        gamma=gamma,
        ratio=ratio,
        gamma_source=source,
        lower=lower,
        achieved=achieved,
        upper=sqp.value,
    )


def sqp_lp_gap(inst: CcbInstance, sqp: Optional[SqpResult] = None) -> float:
    """v(SQP) - (v(LP) of the inner UQ at z_bar + ||z_bar||^2).

    Zero up to round-off: at z_bar the LP relaxation of the inner
    problem is as tight as the SQP bound.
    """

    sqp = sqp or solve_sqp(inst)
    outcome = uq_lp(inner_uq(inst, sqp.z_bar))

    return sqp.value - (outcome.value + float(sqp.z_bar @ sqp.z_bar))


def solve_ccb_sqp(
    inst: CcbInstance,
    gap_tol: float = SQP_GAP_TOL,
    max_iter: Optional[int] = None,
    budget: int = ENUM_BUDGET,
) -> CcbSolution:
    """z_bar with its ratio certificate as a CcbSolution."""
    sqp = solve_sqp(inst, gap_tol, max_iter)
    cert = sqp_certificate(inst, sqp, budget)

    return CcbSolution(
        center=sqp.z_bar,
        squared_radius=cert.achieved,
        method="sqp",
        certificate=cert,
        iterations=sqp.iterations,
        converged=True,
    )
