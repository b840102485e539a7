"""Represent a Euclidean ball."""

from __future__ import annotations

from math import isclose
from typing import TYPE_CHECKING, Any

import numpy as np

from cheb_balls.utils import as_vector

if TYPE_CHECKING:
    from typing_extensions import Self


class Ball:
    """Closed ball {x : ||x - center|| <= radius}."""

    def __init__(self, center, radius: float) -> None:
        """Initialize a Ball.

        Args:
            center (array-like): center a_i of the ball.
            radius (float): positive radius r_i.
        """

        self.center = center
        self.radius = radius

    def __str__(self) -> str:
        coords = ", ".join(f"{c:.6g}" for c in self.center)

        return f"Ball(({coords}), r={self.radius:.6g})"

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Ball):
            return False

        return (
            self.dim == other.dim
            and np.allclose(self.center, other.center, rtol=0, atol=1e-12)
            and isclose(self.radius, other.radius, abs_tol=1e-12)
        )

    def __hash__(self) -> int:
        return hash((tuple(self.center), self.radius))

    @property
    def center(self) -> np.ndarray:
        """Center of the ball."""

        return self._center

    @center.setter
    def center(self, center):
        center = as_vector(center, "center")
        if center.size == 0:
            raise ValueError("Center should have at least one coordinate.")

        self._center = center

    @property
    def radius(self) -> float:
        """Radius of the ball."""

        return self._radius

    @radius.setter
    def radius(self, radius: float):
        if isinstance(radius, bool) or not isinstance(
            radius, (float, int, np.floating, np.integer)
        ):
            raise TypeError("Radius should be float.")

        if not np.isfinite(radius) or radius <= 0:
            raise ValueError("Radius should be positive and finite.")

        self._radius = float(radius)

    @property
    def dim(self) -> int:
        return self._center.size

    @property
    def squared_radius(self) -> float:
        return self._radius**2

    def contains(self, point, tol: float = 1e-9) -> bool:
        """Whether point lies in the ball, up to a relative tolerance."""
        point = as_vector(point, "point")

        gap = np.sum((point - self._center) ** 2) - self.squared_radius

        return bool(gap <= tol * max(1.0, self.squared_radius))

    def to_dict(self) -> dict:
        return {"center": self._center.tolist(), "radius": self._radius}

    @classmethod
    def from_dict(cls, dct: dict) -> Self:
        """Initialize Ball from a dict.

        Expected format:
            {"center": [x_1, ..., x_n], "radius": r}
        """

        if not isinstance(dct, dict):
            raise TypeError("Expect a dict.")

        try:
            center = dct["center"]
            radius = dct["radius"]
        except KeyError as exc:
            raise ValueError(f"Missing required arg {exc}.") from exc

        return cls(center, radius)
