"""Minimum enclosing circle of a planar point set.

Incremental form of Welzl's algorithm: points are visited in a seeded
random order and the circle is rebuilt with one, then two, known
boundary points whenever a point falls outside. Expected linear time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

# relative slack of the membership test
CONTAIN_RTOL = 1e-12


@dataclass(frozen=True)
class Circle:
    """Circle with the input points that define it.

    Attributes:
        center (np.ndarray): shape (2,).
        radius (float): nonnegative.
        support (tuple): up to three points on the boundary.
    """

    center: np.ndarray
    radius: float
    support: tuple = field(default=(), repr=False)

    @property
    def squared_radius(self) -> float:
        return self.radius**2

    def contains(self, point, tol: float = 1e-9) -> bool:
        dist = math.dist(self.center, point)
        return dist <= self.radius + tol * max(1.0, self.radius)


def _covers(circle: Optional[Circle], p: np.ndarray) -> bool:
    if circle is None:
        return False
    dist = math.dist(circle.center, p)
    return dist <= circle.radius * (1.0 + CONTAIN_RTOL) + 1e-15


def _diameter(p: np.ndarray, q: np.ndarray) -> Circle:
    center = 0.5 * (p + q)
    radius = max(math.dist(center, p), math.dist(center, q))
    return Circle(center, radius, (p, q))


def _cross(p, q, r) -> float:
    """Twice the signed area of the triangle p, q, r."""
    return float(
        (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    )


def _circumcircle(p, q, r) -> Optional[Circle]:
    # shift to the bounding-box center for conditioning
    pts = np.vstack([p, q, r])
    origin = 0.5 * (pts.min(axis=0) + pts.max(axis=0))
    (ax, ay), (bx, by), (cx, cy) = pts - origin

    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        return None

    sa, sb, sc = ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy
    center = origin + np.array(
        [
            (sa * (by - cy) + sb * (cy - ay) + sc * (ay - by)) / d,
            (sa * (cx - bx) + sb * (ax - cx) + sc * (bx - ax)) / d,
        ]
    )
    radius = max(math.dist(center, v) for v in (p, q, r))

    return Circle(center, radius, (p, q, r))


def _circle_two(points, p, q) -> Circle:
    """Smallest circle through p and q enclosing points."""
    circle = _diameter(p, q)
    left: Optional[Circle] = None
    right: Optional[Circle] = None

    for r in points:
        if _covers(circle, r):
            continue

        side = _cross(p, q, r)
        c = _circumcircle(p, q, r)
        if c is None:
            continue
        offset = _cross(p, q, c.center)
        if side > 0 and (left is None or offset > _cross(p, q, left.center)):
            left = c
        elif side < 0 and (
            right is None or offset < _cross(p, q, right.center)
        ):
            right = c

    if left is None and right is None:
        return circle
    if left is None:
        return right
    if right is None:
        return left
    return left if left.radius <= right.radius else right


def _circle_one(points, p) -> Circle:
    """Smallest circle through p enclosing points."""
    circle = Circle(p.copy(), 0.0, (p,))

    for i, q in enumerate(points):
        if _covers(circle, q):
            continue
        if circle.radius == 0.0:
            circle = _diameter(p, q)
        else:
            circle = _circle_two(points[: i + 1], p, q)

    return circle


def welzl(points: Sequence, seed: int = 0) -> Circle:
    """Minimum enclosing circle of points.

    Args:
        points (array-like): shape (m, 2), possibly empty.
        seed (int): shuffle seed; the circle itself does not depend on it.

    Returns:
        Circle: radius 0 at the origin when points is empty.
    """

    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if pts.shape[0] == 0:
        return Circle(np.zeros(2), 0.0)

    order = np.random.default_rng(seed).permutation(pts.shape[0])
    shuffled = [pts[i] for i in order]

    circle: Optional[Circle] = None
    for i, p in enumerate(shuffled):
        if not _covers(circle, p):
            circle = _circle_one(shuffled[: i + 1], p)

    assert circle is not None, "Internal error: empty circle"

    return circle
