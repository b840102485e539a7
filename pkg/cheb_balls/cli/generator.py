"""Random instances with an interior point by construction."""

from __future__ import annotations

import numpy as np

from cheb_balls.data import Ball, CcbInstance, UqInstance


def _check(dim: int, p: int, spread: float, margin: float) -> None:
    for name, value in (("Dimension", dim), ("Number of balls", p)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"{name} should be int.")
        if value < 1:
            raise ValueError(f"{name} should be at least 1.")
    if not spread > 0:
        raise ValueError("Spread should be positive.")
    if not margin > 0:
        raise ValueError("Margin should be positive.")


def gen(
    dim: int,
    p: int,
    seed: int = 0,
    spread: float = 1.0,
    margin: float = 0.5,
) -> CcbInstance:
    """p balls in dim dimensions around a common interior anchor.

    Anchor x_0 and centers a_i are uniform in [-spread, spread]^dim and
    r_i = ||x_0 - a_i|| (1 + margin) + margin, so the scaled distance of
    x_0 is at most 1 / (1 + margin).
    """

    _check(dim, p, spread, margin)
    rng = np.random.default_rng(seed)

    anchor = rng.uniform(-spread, spread, size=dim)
    centers = rng.uniform(-spread, spread, size=(p, dim))
    radii = np.linalg.norm(centers - anchor, axis=1) * (1.0 + margin)
    radii += margin

    return CcbInstance([Ball(c, float(r)) for c, r in zip(centers, radii)])


def gen_uq(
    dim: int,
    p: int,
    seed: int = 0,
    spread: float = 1.0,
    margin: float = 0.5,
    bounded: bool = False,
) -> UqInstance:
    """UQ over the balls of gen with a random a_0 in the same cube.

    With bounded, a_0 is a random convex combination of the centers, so
    the LP relaxation has a finite optimum.
    """

    inst = gen(dim, p, seed, spread, margin)
    rng = np.random.default_rng([seed, 1])
    centers = inst.centers

    if bounded:
        a0 = rng.dirichlet(np.ones(p)) @ centers
    else:
        a0 = rng.uniform(-spread, spread, size=dim)

    b = np.sum(centers**2, axis=1) - inst.radii**2

    return UqInstance(a0, centers, b)
