"""Which relaxation of UQ is tight.

For an optimal vertex (x*, y*) of (LP):
    A: x*^T x* = y*  ->  v(LP) = v(SDP) = v(UQ), x* solves UQ
    B: x*^T x* > y*  ->  v(SDP) = v(UQ)
    C: x*^T x* < y*  ->  v(LP) = v(SDP)
so v(SDP) is available without a conic solver: v(LP) in cases A and C,
the exact UQ value in case B. When (LP) is unbounded, a_0 lies outside
conv{a_i} and the SDP is tight as well.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Optional

import numpy as np
import pandas as pd

from cheb_balls.data import UqInstance
from cheb_balls.lp import lp_point, uq_lp
from cheb_balls.uq.duality import duality_conditions
from cheb_balls.uq.enumeration import solve_exact
from cheb_balls.utils import ENUM_BUDGET

Case = Literal["A", "B", "C", "unbounded"]


@dataclass(frozen=True)
class TrichotomyResult:
    """Case tag of the LP vertex; lp_point is None when unbounded."""

    case: Case
    lp_point: Optional[tuple[np.ndarray, float]]
    lp_value: float

    @property
    def is_unbounded(self) -> bool:
        return self.case == "unbounded"


def classify(x: np.ndarray, y: float) -> Case:
    """Case of an LP point, tolerance 1e-9 * max(1, |y|)."""
    gap = float(x @ x) - y
    tol = 1e-9 * max(1.0, abs(y))

    if gap > tol:
        return "B"
    if gap < -tol:
        return "C"
    return "A"


def trichotomy(uq: UqInstance) -> TrichotomyResult:
    outcome = uq_lp(uq)
    if outcome.status == "unbounded":
        return TrichotomyResult("unbounded", None, math.inf)

    assert outcome.is_optimal, "Internal error: (LP) is always feasible"
    x, y = lp_point(outcome)

    return TrichotomyResult(classify(x, y), (x, y), outcome.value)


def sdp_value(uq: UqInstance, budget: int = ENUM_BUDGET) -> float:
    """Optimal value of the SDP relaxation of UQ."""
    tri = trichotomy(uq)
    if tri.case in ("A", "C"):
        return tri.lp_value

    return solve_exact(uq, budget=budget).value


def relaxation_report(uq: UqInstance, budget: int = ENUM_BUDGET) -> dict:
    """LP value, case, SDP value, UQ value and duality conditions."""
    tri = trichotomy(uq)
    exact = solve_exact(uq, budget=budget)
    sdp = tri.lp_value if tri.case in ("A", "C") else exact.value

    return {
        "lp": tri.lp_value,
        "trichotomy": tri.case,
        "sdp": sdp,
        "uq": exact.value,
        "duality": duality_conditions(uq).to_dict(),
    }


def example_instance(alpha: float) -> UqInstance:
    """One-parameter family max x^2 - alpha x s.t. x^2 + x - 4 <= 0,
    x^2 - x <= 0.

    For alpha in [-1, 1): v(LP) = 2(1 - alpha) > v(SDP) = v(UQ) =
    1 - alpha; v(LP) is infinite for |alpha| > 1.
    """

    return UqInstance.from_pairs([alpha / 2.0], [([-0.5], -4.0), ([0.5], 0.0)])


def example_sweep(alphas: Iterable[float]) -> pd.DataFrame:
    """relaxation_report of example_instance(alpha) per alpha."""
    rows = []
    for alpha in alphas:
        report = relaxation_report(example_instance(alpha))
        rows.append(
            {
                "alpha": alpha,
                "lp": report["lp"],
                "trichotomy": report["trichotomy"],
                "sdp": report["sdp"],
                "uq": report["uq"],
            }
        )

    return pd.DataFrame(rows).set_index("alpha")
