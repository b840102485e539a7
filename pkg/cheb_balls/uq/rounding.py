"""Polynomial-time rounding of the LP relaxation of UQ.

Requires the origin to be strictly feasible (all b_i < 0). In case C of
the trichotomy the returned point x satisfies

    f_0(x) >= ((1 - gamma) / (sqrt(2) + gamma))^2 * v(LP),
    gamma = max_i ||a_i|| / sqrt(||a_i||^2 - b_i).
"""

from __future__ import annotations

import math

import numpy as np

from cheb_balls.core import find_interior_point, recenter
from cheb_balls.data import UqInstance
from cheb_balls.errors import PreconditionViolatedError
from cheb_balls.lp import lp_point, uq_lp
from cheb_balls.uq.enumeration import solve_exact
from cheb_balls.uq.solution import UqCertificate, UqSolution
from cheb_balls.uq.trichotomy import classify
from cheb_balls.utils import ENUM_BUDGET


def approximation_ratio(uq: UqInstance) -> tuple[float, float]:
    """(gamma, ((1 - gamma) / (sqrt(2) + gamma))^2) for a centred uq."""
    radii = np.sqrt(np.sum(uq.a**2, axis=1) - uq.b)
    gamma = float(np.max(np.linalg.norm(uq.a, axis=1) / radii))

    return gamma, ((1.0 - gamma) / (math.sqrt(2.0) + gamma)) ** 2


def _positive_root(a: float, b: float, c: float) -> float:
    """Positive root of a t^2 + b t + c with a > 0 and c < 0."""
    disc = math.sqrt(b * b - 4.0 * a * c)
    if b >= 0:
        return -2.0 * c / (b + disc)
    return (-b + disc) / (2.0 * a)


def max_scaling(uq: UqInstance, x: np.ndarray) -> float:
    """Largest tau in [0, 1] with f_i(tau x) <= 0 for all i (b_i < 0)."""
    sq = float(x @ x)
    if sq == 0.0:
        return 1.0

    tau = 1.0
    for a_i, b_i in zip(uq.a, uq.b):
        # tau^2 ||x||^2 - 2 tau a_i^T x + b_i <= 0
        tau = min(tau, _positive_root(sq, -2.0 * float(a_i @ x), b_i))

    return tau


def approx_round(uq: UqInstance, budget: int = ENUM_BUDGET) -> UqSolution:
    """Round an LP optimum to a feasible point of UQ.

    Case A returns the LP point (exact), case B and an unbounded LP the
    exact solution, case C the rounded point with its ratio certificate.

    Raises:
        PreconditionViolatedError: if some b_i >= 0.
    """

    if np.any(uq.b >= 0):
        raise PreconditionViolatedError(
            "Rounding needs the origin strictly feasible (all b_i < 0)."
        )

    outcome = uq_lp(uq)
    if outcome.status == "unbounded":
        return solve_exact(uq, budget=budget)

    x_lp, y_lp = lp_point(outcome)
    v_lp = outcome.value
    case = classify(x_lp, y_lp)

    if case == "A":
        return UqSolution(
            x=x_lp,
            value=float(uq.objective(x_lp)),
            certificate=UqCertificate("exact_lp_tight", bound=v_lp),
            upper_bound=v_lp,
        )
    if case == "B":
        return solve_exact(uq, budget=budget)

    # t along e_1 with ||t||^2 = y* - x*^T x*; case C gives
    # ||t||^2 > 1e-9 * max(1, |y*|), so the beta quadratic below has a
    # positive leading coefficient and no e_2 fallback is needed
    t = np.zeros(uq.dim)
    t[0] = math.sqrt(y_lp - float(x_lp @ x_lp))

    # (x* + beta t) on the level set f_0 = v(LP), beta > 0:
    # ||t||^2 beta^2 + 2 (x* - a_0)^T t beta - ||t||^2 = 0
    t_sq = float(t @ t)
    beta = _positive_root(t_sq, 2.0 * float((x_lp - uq.a0) @ t), -t_sq)

    u1 = 1.0 / math.sqrt(1.0 + beta**2)
    u2 = beta / math.sqrt(1.0 + beta**2)
    candidates = [(u1 * x_lp + u2 * t) / u1, (u2 * x_lp - u1 * t) / u2]

    rho = 1.0 / np.sqrt(np.sum(uq.a**2, axis=1) - uq.b)

    def spread(x):
        return float(np.max(rho * np.linalg.norm(x - uq.a, axis=1)))

    x_bar = min(candidates, key=spread)
    if float(uq.a0 @ x_bar) > 0:
        x_bar = -x_bar

    x_hat = max_scaling(uq, x_bar) * x_bar
    _, ratio = approximation_ratio(uq)

    return UqSolution(
        x=x_hat,
        value=float(uq.objective(x_hat)),
        certificate=UqCertificate("approx_ratio", ratio=ratio, bound=v_lp),
        upper_bound=v_lp,
    )


def approx_round_recentered(
    uq: UqInstance, budget: int = ENUM_BUDGET
) -> UqSolution:
    """approx_round after moving an interior point to the origin.

    The point and value are reported in the original coordinates; a ratio
    certificate refers to the shifted value f_0 - f_0(x_0).
    """

    cert = find_interior_point(uq)
    shifted, offset = recenter(uq, cert.point)
    sol = approx_round(shifted, budget=budget)

    x = sol.x + cert.point

    return UqSolution(
        x=x,
        value=float(uq.objective(x)),
        certificate=sol.certificate,
        upper_bound=sol.upper_bound + offset,
        examined=sol.examined,
    )
