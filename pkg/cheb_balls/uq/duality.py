"""Sufficient conditions for strong duality of the SDP relaxation of UQ.

Either condition guarantees v(SDP) = v(UQ):
    (i)  a_0 lies outside conv{a_1, ..., a_p}, i.e. (DLP) is infeasible;
    (ii) the cone {x : (a_i - a_0)^T x >= 0 for all i} is not {0}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from cheb_balls.data import UqInstance
from cheb_balls.lp import LpProblem, simplex, uq_dlp


@dataclass(frozen=True)
class DualityConditionReport:
    cond_i: bool
    cond_ii: bool

    @property
    def strong_duality_guaranteed(self) -> bool:
        return self.cond_i or self.cond_ii

    def to_dict(self) -> dict:
        return {
            "cond_i": self.cond_i,
            "cond_ii": self.cond_ii,
            "strong_duality_guaranteed": self.strong_duality_guaranteed,
        }


def nontrivial_cone(directions: np.ndarray) -> bool:
    """Whether {x : directions @ x >= 0} contains a nonzero x.

    Decided by 2n LPs: maximize s * x_j subject to the cone and
    s * x_j <= 1; the cone is nontrivial iff some optimum reaches 1.
    """

    n = directions.shape[1]
    for j in range(n):
        for sign in (1.0, -1.0):
            objective = np.zeros(n)
            objective[j] = sign

            problem = LpProblem(
                objective,
                np.vstack([directions, objective]),
                np.append(np.zeros(directions.shape[0]), 1.0),
                [">="] * directions.shape[0] + ["<="],
                free=True,
            )
            outcome = simplex(problem)
            if outcome.is_optimal and outcome.value >= 1.0 - 1e-9:
                return True

    return False


def duality_conditions(uq: UqInstance) -> DualityConditionReport:
    """Evaluate both strong-duality conditions exactly by LPs."""
    cond_i = uq_dlp(uq).status == "infeasible"

    return DualityConditionReport(
        cond_i=cond_i, cond_ii=nontrivial_cone(uq.a - uq.a0)
    )
