"""Boundary of a planar intersection of disks as arcs of its circles.

Circle i meets the boundary where it lies inside every other disk. Disk
j keeps the points a_i + r_i (cos t, sin t) with

    cos(t - phi_ij) <= kappa_ij = (r_j^2 - r_i^2 - d_ij^2) / (2 r_i d_ij),

phi_ij the angle of a_i - a_j: one closed arc facing a_j.
Angles are unrolled, an arc being [start, end] with start in [0, 2 pi)
and end - start <= 2 pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from cheb_balls.ccb import CcbSolution
from cheb_balls.data import CcbInstance
from cheb_balls.errors import DimensionError

TWO_PI = 2.0 * math.pi

# arcs shorter than this (radians) are dropped
EVENT_TOL = 1e-12

# angular slack of the major-arc test
MAJOR_ARC_TOL = 1e-9

# endpoint deduplication distance
DEDUP_TOL = 1e-9


@dataclass(frozen=True)
class Arc:
    """Arc of circle ``ball`` from angle start to angle end."""

    ball: int
    start: float
    end: float

    @property
    def span(self) -> float:
        return self.end - self.start

    def is_major(self, tol: float = MAJOR_ARC_TOL) -> bool:
        return self.span >= math.pi - tol

    def endpoints(self, center: np.ndarray, radius: float) -> np.ndarray:
        angles = np.array([self.start, self.end])
        return center + radius * np.column_stack(
            [np.cos(angles), np.sin(angles)]
        )


@dataclass
class ArcSet:
    """Per-circle arcs of the boundary.

    Attributes:
        arcs (list[list[Arc]]): arcs of each circle, possibly empty.
        full_circle (list[bool]): circle i is uncut by the other disks.
        pair_evaluations (int): unordered circle pairs examined.
    """

    centers: np.ndarray
    radii: np.ndarray
    arcs: list = field(default_factory=list)
    full_circle: list = field(default_factory=list)
    pair_evaluations: int = 0

    def __len__(self) -> int:
        return sum(len(arcs) for arcs in self.arcs)

    def endpoints(self, tol: float = DEDUP_TOL) -> np.ndarray:
        """Distinct arc endpoints, shape (m, 2), in circle order."""
        kept: list[np.ndarray] = []
        for i, arcs in enumerate(self.arcs):
            if self.full_circle[i]:
                continue
            for arc in arcs:
                for point in arc.endpoints(self.centers[i], self.radii[i]):
                    if all(math.dist(point, q) > tol for q in kept):
                        kept.append(point)

        return np.array(kept).reshape(-1, 2)


def _cut(
    intervals: Optional[list], center: float, half: float
) -> Optional[list]:
    """Intersect unrolled intervals with [center - half, center + half].

    None stands for the full circle.
    """

    if half >= math.pi:
        return intervals

    start = (center - half) % TWO_PI
    if intervals is None:
        return [(start, start + 2.0 * half)]

    result = []
    for lo, hi in intervals:
        for k in (-2, -1, 0, 1, 2):
            s = max(lo, start + k * TWO_PI)
            e = min(hi, start + 2.0 * half + k * TWO_PI)
            if e - s > EVENT_TOL:
                result.append((s, e))

    return sorted(result)


def _pair_limit(
    a_i: np.ndarray, r_i: float, a_j: np.ndarray, r_j: float
) -> tuple[float, float]:
    """(center, half-width) of the part of circle i inside disk j.

    Half-width pi means uncut, negative means empty.
    """

    diff = a_i - a_j
    d = math.hypot(diff[0], diff[1])
    if d == 0.0:
        # concentric: containment decides
        return 0.0, (math.pi if r_j >= r_i else -1.0)

    kappa = (r_j**2 - r_i**2 - d**2) / (2.0 * r_i * d)
    if kappa >= 1.0:
        return 0.0, math.pi
    if kappa < -1.0:
        return 0.0, -1.0

    phi = math.atan2(diff[1], diff[0])
    return phi + math.pi, math.pi - math.acos(kappa)


def arc_decomposition(inst: CcbInstance) -> ArcSet:
    """Arcs of every circle on the boundary of the intersection.

    Each unordered pair of circles is examined once, cutting both.

    Raises:
        DimensionError: if the instance is not planar.
    """

    if inst.dim != 2:
        raise DimensionError(
            f"Arc decomposition needs dim 2, got {inst.dim}."
        )

    centers, radii = inst.centers, inst.radii
    p = len(inst)
    intervals: list = [None] * p
    empty = [False] * p
    evaluations = 0

    for i, j in combinations(range(p), 2):
        evaluations += 1
        for u, v in ((i, j), (j, i)):
            if empty[u]:
                continue
            center, half = _pair_limit(
                centers[u], radii[u], centers[v], radii[v]
            )
            if half < 0:
                empty[u] = True
                continue
            intervals[u] = _cut(intervals[u], center, half)
            if intervals[u] == []:
                empty[u] = True

    arcs, full = [], []
    for i in range(p):
        if empty[i]:
            arcs.append([])
            full.append(False)
        elif intervals[i] is None:
            arcs.append([Arc(i, 0.0, TWO_PI)])
            full.append(True)
        else:
            arcs.append([Arc(i, s, e) for s, e in intervals[i]])
            full.append(False)

    return ArcSet(
        centers=centers,
        radii=radii,
        arcs=arcs,
        full_circle=full,
        pair_evaluations=evaluations,
    )


def major_arc_index(arcs: ArcSet) -> Optional[int]:
    """Circle qualifying as the optimal cover: smallest radius, then
    lowest index, among circles that are uncut or carry an arc spanning
    at least pi.
    """

    candidates = [
        i
        for i, circle_arcs in enumerate(arcs.arcs)
        if arcs.full_circle[i] or any(a.is_major() for a in circle_arcs)
    ]
    if not candidates:
        return None

    return min(candidates, key=lambda i: (arcs.radii[i], i))


def major_arc_shortcut(
    arcs: ArcSet, inst: CcbInstance
) -> Optional[CcbSolution]:
    """Circle i itself when it carries a major arc or is uncut."""
    i = major_arc_index(arcs)
    if i is None:
        return None

    return CcbSolution(
        center=inst.centers[i],
        squared_radius=float(inst.radii[i]) ** 2,
        method="planar",
        certificate={"kind": "major_arc", "ball": i},
        iterations=arcs.pair_evaluations,
    )
