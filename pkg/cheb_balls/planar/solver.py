"""Exact Chebyshev center in the plane with O(p^2) pair work.

Either some circle carries a major arc, and that circle is the answer,
or every boundary arc is minor and the smallest circle covering all arc
endpoints covers the whole intersection.
"""

from __future__ import annotations

import warnings

from cheb_balls.ccb import CcbSolution, evaluate_center, solve_ccb_ellipsoid
from cheb_balls.data import CcbInstance
from cheb_balls.errors import ConvergenceWarning, DimensionError
from cheb_balls.planar.arcs import arc_decomposition, major_arc_shortcut
from cheb_balls.planar.welzl import welzl

# relative agreement of the circle with evaluate_center
VERIFY_TOL = 1e-6


def solve_planar(
    inst: CcbInstance, seed: int = 0, verify: bool = True
) -> CcbSolution:
    """Chebyshev center of a planar instance.

    Args:
        inst (CcbInstance): instance with dim 2.
        seed (int): Welzl shuffle seed.
        verify (bool): compare the circle with evaluate_center and fall
            back to the ellipsoid method on disagreement.

    Raises:
        DimensionError: if inst.dim != 2.

    Warns:
        ConvergenceWarning: when verification fails and the ellipsoid
            result is returned instead.
    """

    if inst.dim != 2:
        raise DimensionError(
            f"Planar solver needs dim 2, got {inst.dim}."
        )

    arcs = arc_decomposition(inst)
    shortcut = major_arc_shortcut(arcs, inst)
    if shortcut is not None:
        return shortcut

    endpoints = arcs.endpoints()
    circle = welzl(endpoints, seed=seed)
    solution = CcbSolution(
        center=circle.center,
        squared_radius=circle.squared_radius,
        method="planar",
        certificate={
            "kind": "welzl",
            "endpoints": int(endpoints.shape[0]),
            "support": [list(map(float, p)) for p in circle.support],
        },
        iterations=arcs.pair_evaluations,
    )
    if not verify:
        return solution

    achieved = evaluate_center(inst, circle.center)
    if abs(achieved - circle.squared_radius) <= VERIFY_TOL * max(
        1.0, achieved
    ):
        return solution

    warnings.warn(
        f"Enclosing circle of the arc endpoints has squared radius "
        f"{circle.squared_radius:.10g}, evaluate_center gives "
        f"{achieved:.10g}; falling back to the ellipsoid method.",
        ConvergenceWarning,
    )
    return solve_ccb_ellipsoid(inst)
