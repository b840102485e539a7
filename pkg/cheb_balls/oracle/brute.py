"""Brute-force reference answers for tests and fallbacks.

Nothing here reuses the solvers' kernels: feasibility is tested through
distances to the ball centers, interior points come from a direct
derivative-free search, and enclosing balls from SLSQP on small core
sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy.optimize import minimize

from cheb_balls.data import CcbInstance, UqInstance

# ray-shooting bisection steps
BOUNDARY_STEPS = 20

# grid points cap; the step is coarsened beyond it
GRID_CAP = 2_000_000


@dataclass(frozen=True)
class OracleConfig:
    """Sampling settings.

    Attributes:
        samples (int): random samples (UQ for n > 3, boundary rays).
        grid_step (float): grid spacing for UQ with n <= 3.
        seed (int): random seed.
        polish (bool): run a local SLSQP polish from the best sample.
    """

    samples: int = 10_000
    grid_step: float = 1e-2
    seed: int = 0
    polish: bool = True

    def __post_init__(self):
        if isinstance(self.samples, bool) or not isinstance(
            self.samples, int
        ):
            raise TypeError("Samples should be int.")
        if self.samples < 1:
            raise ValueError("Samples should be at least 1.")
        if not self.grid_step > 0:
            raise ValueError("Grid step should be positive.")


@dataclass(frozen=True)
class OracleEstimate:
    """Sampled answer with a resolution estimate.

    For oracle_uq, value is f_0 at point; for oracle_ccb, point is the
    center and value its squared radius.
    """

    value: float
    point: np.ndarray
    resolution: float


def _balls(inst: Union[CcbInstance, UqInstance]):
    if isinstance(inst, UqInstance):
        sq = np.sum(inst.a**2, axis=1) - inst.b
        return inst.a.copy(), np.maximum(sq, 0.0)

    return inst.centers, inst.radii**2


def _inside(points, centers, sq_radii, rtol: float = 1e-10) -> np.ndarray:
    """Mask of points (m, n) within every ball."""
    limit = sq_radii + rtol * np.maximum(1.0, sq_radii)
    mask = np.ones(points.shape[0], dtype=bool)

    for center, lim in zip(centers, limit):
        mask &= np.sum((points - center) ** 2, axis=1) <= lim

    return mask


def _interior_guess(centers, sq_radii) -> np.ndarray:
    """Point of least worst scaled distance, by Nelder-Mead."""
    radii = np.sqrt(np.maximum(sq_radii, 1e-300))

    def worst(x):
        return np.max(np.linalg.norm(centers - x, axis=1) / radii)

    starts = np.vstack([centers.mean(axis=0)[None], centers])
    start = min(starts, key=worst)

    res = minimize(
        worst,
        start,
        method="Nelder-Mead",
        options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 4000},
    )

    return res.x if worst(res.x) <= worst(start) else start


def oracle_uq(
    uq: UqInstance, cfg: Optional[OracleConfig] = None
) -> OracleEstimate:
    """Lower bound on v(UQ) from a grid (n <= 3) or random samples,
    refined by a local polish.

    Falls back to an interior point when no sample is feasible.
    """

    cfg = cfg or OracleConfig()
    centers, sq_radii = _balls(uq)
    radii = np.sqrt(sq_radii)
    n = uq.dim

    lower = np.max(centers - radii[:, None], axis=0)
    upper = np.min(centers + radii[:, None], axis=0)
    upper = np.maximum(upper, lower)

    def f0(x):
        return np.sum(x * x, axis=-1) - 2.0 * x @ uq.a0

    step = cfg.grid_step
    if n <= 3:
        while np.prod(np.floor((upper - lower) / step) + 1) > GRID_CAP:
            step *= 1.5
        axes = [
            np.arange(lo, hi + 0.5 * step, step)
            for lo, hi in zip(lower, upper)
        ]
        grid = np.meshgrid(*axes, indexing="ij")
        points = np.stack([g.ravel() for g in grid], axis=1)
    else:
        rng = np.random.default_rng(cfg.seed)
        points = rng.uniform(lower, upper, size=(cfg.samples, n))

    mask = _inside(points, centers, sq_radii)
    if np.any(mask):
        feasible = points[mask]
        best = feasible[int(np.argmax(f0(feasible)))]
    else:
        best = _interior_guess(centers, sq_radii)

    if cfg.polish:
        res = minimize(
            lambda x: -f0(x),
            best,
            jac=lambda x: -2.0 * (x - uq.a0),
            method="SLSQP",
            constraints=[
                {
                    "type": "ineq",
                    "fun": lambda x: sq_radii
                    - np.sum((centers - x) ** 2, axis=1),
                    "jac": lambda x: 2.0 * (centers - x),
                }
            ],
            options={"ftol": 1e-14, "maxiter": 500},
        )
        if _inside(res.x[None], centers, sq_radii)[0] and f0(res.x) > f0(
            best
        ):
            best = res.x

    reach = float(np.max(np.linalg.norm(points - uq.a0, axis=1)))
    resolution = step * math.sqrt(n) * 2.0 * reach

    return OracleEstimate(
        value=float(f0(best)), point=np.array(best), resolution=resolution
    )


def sample_boundary(
    inst: CcbInstance, cfg: Optional[OracleConfig] = None
) -> np.ndarray:
    """Points on the boundary of the intersection by ray shooting.

    From an interior point x_0, each random unit direction u is followed
    to the largest feasible t by bisection; the feasible end is kept.

    Returns:
        np.ndarray: shape (cfg.samples, n).
    """

    cfg = cfg or OracleConfig()
    centers, sq_radii = _balls(inst)
    origin = _interior_guess(centers, sq_radii)

    rng = np.random.default_rng(cfg.seed)
    directions = rng.standard_normal((cfg.samples, inst.dim))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)

    lo = np.zeros(cfg.samples)
    hi = np.full(cfg.samples, 2.0 * float(np.sqrt(sq_radii.min())))

    for _ in range(BOUNDARY_STEPS):
        mid = 0.5 * (lo + hi)
        trial = origin + mid[:, None] * directions
        inside = _inside(trial, centers, sq_radii)
        lo = np.where(inside, mid, lo)
        hi = np.where(inside, hi, mid)

    return origin + lo[:, None] * directions


def _core_set_ball(points: np.ndarray) -> tuple[np.ndarray, float]:
    """Smallest ball around a few points via SLSQP on (center, t)."""
    n = points.shape[1]
    center = points.mean(axis=0)
    t0 = float(np.max(np.sum((points - center) ** 2, axis=1)))

    res = minimize(
        lambda v: v[n],
        np.append(center, t0),
        jac=lambda v: np.append(np.zeros(n), 1.0),
        method="SLSQP",
        constraints=[
            {
                "type": "ineq",
                "fun": lambda v: v[n]
                - np.sum((points - v[:n]) ** 2, axis=1),
            }
        ],
        options={"ftol": 1e-15, "maxiter": 1000},
    )
    center = res.x[:n]

    return center, float(np.max(np.sum((points - center) ** 2, axis=1)))


def oracle_ccb(
    inst: CcbInstance, cfg: Optional[OracleConfig] = None
) -> OracleEstimate:
    """Smallest ball enclosing sampled boundary points.

    Core-set refinement: solve the ball of a small subset, add the
    farthest sample, repeat until every sample is within relative 1e-4.
    """

    cfg = cfg or OracleConfig()
    points = sample_boundary(inst, cfg)

    first = int(np.argmax(np.sum((points - points.mean(axis=0)) ** 2, 1)))
    second = int(np.argmax(np.sum((points - points[first]) ** 2, axis=1)))
    core = sorted({first, second})

    for _ in range(200):
        center, _ = _core_set_ball(points[core])
        dist_sq = np.sum((points - center) ** 2, axis=1)
        sq_radius = float(dist_sq.max())
        far = int(np.argmax(dist_sq))

        inner = float(np.max(dist_sq[core]))
        if sq_radius <= inner * (1.0 + 1e-4) ** 2 or far in core:
            break
        core.append(far)

    n = inst.dim
    spacing = 1e-4
    if n >= 2:
        spacing += (8.0 * math.log(cfg.samples + 1) / cfg.samples) ** (
            2.0 / (n - 1)
        )

    return OracleEstimate(
        value=sq_radius,
        point=center,
        resolution=sq_radius * spacing,
    )
