"""Exact UQ by enumeration of active constraint sets.

Shift coordinates to u = x - a_0 and let z = ||u||^2. Then
f_0(x) = z - ||a_0||^2 and constraint i reads

    z - 2 d_i^T u + c_i <= 0,   d_i = a_i - a_0,  c_i = f_i(a_0),

which is linear in (u, z). If the constraints in J are active, (u, z)
lies on an affine flat F_J of dimension n + 1 - |J|; intersecting with
the paraboloid z = ||u||^2 gives a sphere in u-space on which z is an
affine function. Its maximum is one point (two points when |J| = n, the
classical n-subset case, where both roots are kept).

Every global maximizer is such a point for some J of size <= min(p, n)
with independent rows (2 d_i, -1). Families are visited by size; a
family whose maximum is below the incumbent is pruned together with all
its supersets, whose families it contains.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import qr, solve_triangular
from scipy.special import comb

from cheb_balls.data import UqInstance
from cheb_balls.errors import (
    BudgetExceededError,
    ConvergenceWarning,
    NoCandidateError,
)
from cheb_balls.oracle import OracleConfig, oracle_uq
from cheb_balls.uq.solution import UqCertificate, UqSolution
from cheb_balls.utils import CANDIDATE_TOL, ENUM_BUDGET, constraint_scale

# relative singular value cut for independent active rows
RANK_TOL = 1e-10

# relative tie tolerance between candidate values
TIE_TOL = 1e-9


@dataclass(frozen=True)
class _Family:
    """Points where an active set attains the largest z."""

    bound: float
    points: list  # list[np.ndarray] of u, in root order


def active_set_count(p: int, n: int) -> int:
    """Number of active sets of size 1..min(p, n)."""
    return int(sum(comb(p, k, exact=True) for k in range(1, min(p, n) + 1)))


def _family(rows: np.ndarray, c: np.ndarray) -> Optional[_Family]:
    """Maximize z over {(u, z) : rows u - z = c, z = ||u||^2}.

    Args:
        rows (np.ndarray): 2 d_i^T for i in J, shape (k, n).
        c (np.ndarray): c_i for i in J.

    Returns:
        _Family or None when rows are dependent or the set is empty.
    """

    k, n = rows.shape
    M = np.hstack([rows, -np.ones((k, 1))])

    left, sv, right_t = np.linalg.svd(M)
    if sv[-1] <= RANK_TOL * sv[0]:
        return None

    # minimum-norm particular solution and null space basis
    v_p = right_t[:k].T @ ((left.T @ c) / sv)
    null = right_t[k:].T
    u_p, z_p = v_p[:n], v_p[n]
    U, h = null[:n], null[n]

    # U has full column rank: (0, 1) is never in the null space of M
    Q, R = qr(U, mode="economic")
    if np.min(np.abs(np.diag(R))) <= 1e-12:
        return None

    # on the family: u = u_p + Q s, z = z_p + grad^T s
    grad = solve_triangular(R, h, trans="T")
    proj = Q.T @ u_p
    perp_sq = max(float(u_p @ u_p - proj @ proj), 0.0)
    mid = 0.5 * grad - proj

    rad_sq = z_p - perp_sq + mid @ mid - proj @ proj
    scale = max(1.0, abs(z_p), float(mid @ mid), float(proj @ proj))
    if rad_sq < -1e-12 * scale:
        return None
    radius = math.sqrt(max(rad_sq, 0.0))

    dim = null.shape[1]
    grad_norm = float(np.linalg.norm(grad))

    if grad_norm > 1e-10 * max(1.0, abs(z_p)):
        direction = grad / grad_norm
        steps = [radius, -radius] if dim == 1 else [radius]
        bound = float(z_p + grad @ mid + radius * grad_norm)
        points = [u_p + Q @ (mid + t * direction) for t in steps]

    else:
        # z is constant on the family: pick points by coordinate order
        for j in range(n):
            direction = Q[j].copy()
            if np.linalg.norm(direction) > 1e-8:
                break
        direction /= np.linalg.norm(direction)

        steps = [radius, -radius] if dim == 1 else [radius]
        bound = float(z_p)
        points = [u_p + Q @ (mid + t * direction) for t in steps]
        points.sort(key=lambda u: tuple(u))

    return _Family(bound=bound, points=points)


def solve_exact(
    uq: UqInstance,
    budget: int = ENUM_BUDGET,
    tol: float = CANDIDATE_TOL,
    fallback: bool = True,
) -> UqSolution:
    """Global maximizer of UQ.

    Ties between candidates (relative 1e-9) go to the lexicographically
    smallest active set, then the smaller root index (roots ordered by
    decreasing z, then increasing x).

    Args:
        uq (UqInstance): instance to solve.
        budget (int): maximum number of active sets.
        tol (float): relative feasibility tolerance for candidates.
        fallback (bool): on failure, warn and return the sampling
            oracle's point instead of raising.

    Raises:
        BudgetExceededError: if the active set count exceeds budget.
        NoCandidateError: if nothing feasible is found and fallback is
            False.
    """

    n, p = uq.dim, len(uq)
    total = active_set_count(p, n)
    if total > budget:
        raise BudgetExceededError(
            f"{total} active sets exceed the enumeration budget {budget}."
        )

    d2 = 2.0 * (uq.a - uq.a0)
    c = uq.constraint_values(uq.a0)
    limits = tol * constraint_scale(uq.b)

    best: Optional[tuple] = None  # (z, subset, root, x)
    examined = 0

    def offer(z: float, subset: tuple, root: int, x: np.ndarray) -> None:
        nonlocal best
        if best is None:
            best = (z, subset, root, x)
            return

        gap = z - best[0]
        tie = TIE_TOL * max(1.0, abs(best[0]))
        if gap > tie or (
            abs(gap) <= tie and (subset, root) < (best[1], best[2])
        ):
            best = (z, subset, root, x)

    level = [(i,) for i in range(p)]
    size = 1
    while level:
        bounds = []
        for subset in level:
            examined += 1
            family = _family(d2[list(subset)], c[list(subset)])
            if family is None:
                continue

            for root, u in enumerate(family.points):
                x = u + uq.a0
                if np.all(uq.constraint_values(x) <= limits):
                    offer(float(u @ u), subset, root, x)
            bounds.append((subset, family.bound))

        size += 1
        if size > min(p, n):
            break

        floor = -math.inf
        if best is not None:
            floor = best[0] - TIE_TOL * max(1.0, abs(best[0]))
        level = [
            subset + (j,)
            for subset, bound in bounds
            if bound >= floor
            for j in range(subset[-1] + 1, p)
        ]

    if best is None:
        message = "Enumeration found no feasible candidate."
        if not fallback:
            raise NoCandidateError(message)

        warnings.warn(f"{message} Using sampling oracle.", ConvergenceWarning)
        estimate = oracle_uq(uq, OracleConfig())

        return UqSolution(
            x=estimate.point,
            value=estimate.value,
            certificate=UqCertificate("oracle_fallback"),
            examined=examined,
        )

    _, subset, root, x = best
    value = float(uq.objective(x))

    return UqSolution(
        x=x,
        value=value,
        certificate=UqCertificate(
            "exact_enumeration", active_set=subset, root=root
        ),
        upper_bound=value,
        examined=examined,
    )
