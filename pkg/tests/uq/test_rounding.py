import math

import numpy as np
import pytest

from cheb_balls.cli import gen, gen_uq
from cheb_balls.core import feasible, find_interior_point, recenter
from cheb_balls.data import UqInstance
from cheb_balls.errors import PreconditionViolatedError
from cheb_balls.lp import uq_lp
from cheb_balls.uq import (
    approx_round,
    approx_round_recentered,
    approximation_ratio,
    example_instance,
    solve_exact,
    trichotomy,
)


@pytest.fixture
def symmetric():
    # balls ((0.5), 1.5) and ((-0.5), 1.5), feasible set [-1, 1]
    return UqInstance.from_pairs([0], [([0.5], -2.0), ([-0.5], -2.0)])


class Test_approx_round:
    def test_ratio(self, symmetric):
        gamma, ratio = approximation_ratio(symmetric)

        assert math.isclose(gamma, 1 / 3)
        assert math.isclose(ratio, ((2 / 3) / (math.sqrt(2) + 1 / 3)) ** 2)
        assert math.isclose(ratio, 0.14553, rel_tol=1e-4)

    def test_case_c(self, symmetric):
        sol = approx_round(symmetric)

        assert np.allclose(sol.x, [1])
        assert math.isclose(sol.value, 1.0)
        assert sol.certificate.kind == "approx_ratio"
        assert math.isclose(sol.upper_bound, 2.0)
        assert sol.value >= sol.certificate.ratio * sol.upper_bound
        assert feasible(symmetric, sol.x)

    def test_case_c_planar(self):
        uq = UqInstance.from_pairs([0, 0], [([-1, 0], -3.0), ([1, 0], -3.0)])
        sol = approx_round(uq)

        assert feasible(uq, sol.x)
        assert math.isclose(sol.upper_bound, 3.0)
        assert sol.value >= sol.certificate.ratio * 3.0
        assert sol.value <= solve_exact(uq).value + 1e-9

    def test_unbounded(self):
        # a_0 outside the hull of the centers
        uq = UqInstance.from_pairs([1], [([0.5], -2.0), ([-0.5], -2.0)])
        sol = approx_round(uq)

        assert sol.certificate.kind == "exact_enumeration"
        assert np.allclose(sol.x, [-1])
        assert math.isclose(sol.value, 3.0)

    def test_precondition(self):
        with pytest.raises(PreconditionViolatedError, match="all b_i < 0"):
            approx_round(example_instance(0.0))

    def test_recentered(self):
        uq = example_instance(0.0)
        sol = approx_round_recentered(uq)

        assert feasible(uq, sol.x)
        assert sol.value <= 1.0 + 1e-9
        assert sol.upper_bound >= 1.0 - 1e-9


def _equal_radii(n: int, seed: int, radius: float = 3.0) -> UqInstance:
    """n + 1 balls of one radius around gen centers, a_0 in their hull."""
    centers = gen(n, n + 1, seed).centers
    a0 = np.random.default_rng(seed).dirichlet(np.ones(n + 1)) @ centers
    b = np.sum(centers**2, axis=1) - radius**2

    return UqInstance(a0, centers, b)


class Test_random_case_c:
    def test_ratio(self):
        instances = [_equal_radii(2 + seed % 2, seed) for seed in range(30)]
        instances += [
            gen_uq(2 + seed % 2, 3 + seed % 3, seed, bounded=True)
            for seed in range(30)
        ]

        checked = 0
        for uq in instances:
            shifted, _ = recenter(uq, find_interior_point(uq).point)
            if trichotomy(shifted).case != "C":
                continue
            checked += 1

            v_lp = uq_lp(shifted).value
            gamma, ratio = approximation_ratio(shifted)
            sol = approx_round(shifted)

            assert gamma < 1
            assert sol.certificate.kind == "approx_ratio"
            assert feasible(shifted, sol.x)
            assert sol.value >= ratio * v_lp - 1e-7
            assert sol.value <= v_lp + 1e-9 * max(1.0, abs(v_lp))

        assert checked >= 15
