"""Move between CC_B and its inner UQ, and translate UQ instances."""

from __future__ import annotations

import numpy as np

from cheb_balls.data import CcbInstance, UqInstance
from cheb_balls.errors import DimensionMismatchError, NotInteriorError
from cheb_balls.utils import FEAS_TOL, as_vector, constraint_scale


def inner_uq(inst: CcbInstance, z) -> UqInstance:
    """Inner maximization max_{x in Omega} ||x - z||^2 as a UqInstance.

    ||x - z||^2 = x^T x - 2 z^T x + z^T z, so a_0 = z and the caller adds
    ||z||^2 to the UQ value. Ball i becomes a_i = center,
    b_i = ||a_i||^2 - r_i^2.
    """

    z = as_vector(z, "z")
    if z.size != inst.dim:
        raise DimensionMismatchError(
            f"Center dim {z.size} differs from instance dim {inst.dim}."
        )

    centers = inst.centers
    b = np.sum(centers**2, axis=1) - inst.radii**2

    return UqInstance(z, centers, b)


def recenter(uq: UqInstance, x0) -> tuple[UqInstance, float]:
    """Translate uq so that x0 becomes the origin.

    With x = x' + x0:
        f_i(x) = x'^T x' - 2 (a_i - x0)^T x' + f_i(x0)
        f_0(x) = x'^T x' - 2 (a_0 - x0)^T x' + f_0(x0)

    Returns:
        tuple: the shifted instance (all b_i < 0) and the value offset
            f_0(x0), so that value(original) = value(shifted) + offset.

    Raises:
        NotInteriorError: if some f_i(x0) >= -tol * max(1, |b_i|).
    """

    x0 = as_vector(x0, "x0")
    if x0.size != uq.dim:
        raise DimensionMismatchError("x0 has the wrong dimension.")

    values = uq.constraint_values(x0)
    if np.any(values >= -FEAS_TOL * constraint_scale(uq.b)):
        worst = int(np.argmax(values))
        raise NotInteriorError(
            f"Point is not strictly feasible: f_{worst + 1} = "
            f"{values[worst]:.6g}."
        )

    shifted = UqInstance(uq.a0 - x0, uq.a - x0, values)

    return shifted, float(uq.objective(x0))


def feasible(uq: UqInstance, x, tol: float = FEAS_TOL) -> bool:
    """Whether f_i(x) <= tol * max(1, |b_i|) for every constraint."""
    values = uq.constraint_values(as_vector(x, "x"))

    return bool(np.all(values <= tol * constraint_scale(uq.b)))
