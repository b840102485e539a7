"""Interior points of an intersection of balls.

gamma(x) = max_i ||x - a_i|| / r_i is convex; gamma(x) < 1 exactly when
x is strictly inside every ball. Its minimum over R^n is attained in the
convex hull of the centers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from cheb_balls.core.ellipsoid import (
    bisection_iterations,
    bisection_minimize,
    ellipsoid_iterations,
    ellipsoid_minimize,
)
from cheb_balls.data import CcbInstance, UqInstance
from cheb_balls.errors import DimensionMismatchError, EmptyInteriorError
from cheb_balls.utils import INTERIOR_MARGIN


@dataclass(frozen=True)
class InteriorCertificate:
    """A point x_0 and its scaled distance gamma = max_i ||x_0-a_i||/r_i."""

    point: np.ndarray
    gamma: float

    def __str__(self) -> str:
        return f"InteriorCertificate(point={self.point}, gamma={self.gamma})"

    @property
    def is_interior(self) -> bool:
        return self.gamma < 1.0 - INTERIOR_MARGIN


def scaled_distance(centers: np.ndarray, radii: np.ndarray, x) -> float:
    """max_i ||x - a_i|| / r_i."""
    dist = np.linalg.norm(centers - np.asarray(x, dtype=float), axis=1)

    return float(np.max(dist / radii))


def find_interior_point(
    inst: Union[CcbInstance, UqInstance], tol: float = 1e-9
) -> InteriorCertificate:
    """Minimize max_i ||x - a_i|| / r_i to absolute accuracy tol.

    A UqInstance is first converted to its constraint balls.

    Returns:
        InteriorCertificate: best point found; compare gamma to 1.
    """

    if isinstance(inst, UqInstance):
        inst = inst.to_ccb()

    centers, radii = inst.centers, inst.radii

    # coordinates relative to the mean center
    mean = centers.mean(axis=0)
    local = centers - mean

    def objective(x):
        dist = np.linalg.norm(local - x, axis=1)
        scaled = dist / radii
        j = int(np.argmax(scaled))

        if dist[j] == 0.0:
            return 0.0, np.zeros_like(x)

        return float(scaled[j]), (x - local[j]) / (radii[j] * dist[j])

    lipschitz = float(np.max(1.0 / radii))
    radius = float(np.max(np.linalg.norm(local, axis=1)))

    if radius == 0.0:
        point = mean
    elif inst.dim == 1:
        lower, upper = float(local.min()), float(local.max())
        steps = bisection_iterations(lipschitz, upper - lower, tol)
        state = bisection_minimize(objective, lower, upper, steps)
        point = mean + state.best_point
    else:
        steps = ellipsoid_iterations(inst.dim, lipschitz, radius, radius, tol)
        origin = np.zeros(inst.dim)
        state = ellipsoid_minimize(objective, origin, radius, steps)
        point = mean + state.best_point

    return InteriorCertificate(
        point=point, gamma=scaled_distance(centers, radii, point)
    )


def validate(inst: CcbInstance) -> InteriorCertificate:
    """Certify that the intersection of balls has nonempty interior.

    Raises:
        EmptyInteriorError: if the minimax value is >= 1 - 1e-7
            (tangent balls are rejected).
        DimensionMismatchError: if balls disagree on dimension.
    """

    if not isinstance(inst, CcbInstance):
        raise TypeError("Expect a CcbInstance.")

    if len({ball.dim for ball in inst.balls}) != 1:
        raise DimensionMismatchError("Balls of different dimensions found.")

    cert = find_interior_point(inst)
    if not cert.is_interior:
        raise EmptyInteriorError(
            f"No interior point: minimax scaled distance {cert.gamma:.6g}."
        )

    return cert
