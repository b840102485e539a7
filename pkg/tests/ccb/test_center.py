import math

import numpy as np
import pytest

from cheb_balls.ccb import (
    ccb_subgradient,
    evaluate_center,
    inner_solution,
    solve_ccb_ellipsoid,
    solve_sqp,
)
from cheb_balls.cli import gen
from cheb_balls.core import ellipsoid_iterations, ellipsoid_minimize
from cheb_balls.data import Ball, CcbInstance
from cheb_balls.errors import IterationLimitWarning


@pytest.fixture
def segment():
    # intersection is [0, 1]
    return CcbInstance([Ball([-0.5], math.sqrt(4.25)), Ball([0.5], 0.5)])


@pytest.fixture
def lens():
    return CcbInstance([Ball([0, 0], 1), Ball([1, 0], 1)])


class Test_evaluate_center:
    def test_values(self, segment, lens):
        assert math.isclose(evaluate_center(segment, [0.5]), 0.25)
        assert math.isclose(evaluate_center(segment, [0.0]), 1.0)
        assert math.isclose(evaluate_center(lens, [0.5, 0]), 0.75)

        single = CcbInstance([Ball([1, 1], 2)])
        assert math.isclose(evaluate_center(single, [1, 1]), 4.0)

    def test_inner_solution(self, segment):
        sol = inner_solution(segment, [0.0])

        assert np.allclose(sol.x, [1])
        assert math.isclose(sol.value, 1.0)

    def test_subgradient(self, segment):
        assert np.allclose(ccb_subgradient(segment, [0.0]), [-2])

        # farthest points 0 and 1 tie; the smaller one is kept
        assert np.allclose(ccb_subgradient(segment, [0.5]), [1])


class Test_solve_ccb_ellipsoid:
    def test_segment(self, segment):
        sol = solve_ccb_ellipsoid(segment, eps=1e-5)

        assert sol.method == "ellipsoid"
        assert sol.converged
        assert np.allclose(sol.center, [0.5])
        assert math.isclose(sol.squared_radius, 0.25)
        assert sol.certificate["required_steps"] == 19

    def test_lens(self, lens):
        sol = solve_ccb_ellipsoid(lens, eps=1e-4)

        assert sol.converged
        assert 0.75 - 1e-9 <= sol.squared_radius <= 0.75 + 1e-4
        assert np.allclose(sol.center, [0.5, 0], atol=2e-2)
        assert sol.certificate["gap_bound"] <= 1e-4

        # Test __str__
        assert str(sol).startswith("CcbSolution(ellipsoid")

    def test_single_ball(self):
        sol = solve_ccb_ellipsoid(CcbInstance([Ball([1, 2], 3)]))

        assert np.allclose(sol.center, [1, 2])
        assert math.isclose(sol.squared_radius, 9.0)

    def test_iteration_limit(self, lens):
        with pytest.warns(IterationLimitWarning):
            sol = solve_ccb_ellipsoid(lens, eps=1e-4, max_iter=5)

        assert not sol.converged
        assert sol.iterations == 5
        assert sol.certificate["required_steps"] > 5
        assert sol.squared_radius >= 0.75 - 1e-9

    def test_trace(self, lens):
        sol = solve_ccb_ellipsoid(lens, eps=1e-2, record_trace=True)

        assert list(sol.trace.columns) == [
            "k",
            "point_value",
            "best_value",
            "feasible",
        ]
        assert len(sol.trace) == sol.iterations
        assert (np.diff(sol.trace["best_value"]) <= 0).all()

        assert solve_ccb_ellipsoid(lens, eps=1e-2).trace is None


class Test_random_instances:
    @pytest.mark.parametrize("seed", range(6))
    def test_reaches_target(self, seed):
        n = 2 + seed % 2
        inst = gen(n, 3 + seed % 2, seed)
        eps = 1e-4

        sol = solve_ccb_ellipsoid(inst, eps=eps)
        upper = evaluate_center(inst, solve_sqp(inst).z_bar)

        q = int(np.argmin(inst.radii))
        a1, r1 = inst.centers[q], float(inst.radii[q])
        lipschitz = 4.0 * (float(np.linalg.norm(a1)) + r1)

        assert sol.converged
        assert sol.certificate["required_steps"] == ellipsoid_iterations(
            n, lipschitz, r1, r1, eps
        )
        assert sol.iterations <= sol.certificate["required_steps"]
        assert sol.squared_radius <= upper + eps
        assert math.isclose(
            sol.squared_radius,
            evaluate_center(inst, sol.center),
            rel_tol=1e-12,
            abs_tol=1e-12,
        )

    @pytest.mark.parametrize("seed", range(3))
    def test_shape_matrix(self, seed):
        inst = gen(3, 4, seed)
        n, steps, radius = 3, 40, 3.0

        def objective(z):
            sol = inner_solution(inst, z)
            return sol.value + float(z @ z), 2.0 * (z - sol.x)

        state = ellipsoid_minimize(
            objective, inst.centers.mean(axis=0), radius, steps
        )

        # each step scales det H by (n^2/(n^2-1))^n (n-1)/(n+1)
        log_step = n * math.log(n**2 / (n**2 - 1)) + math.log(
            (n - 1) / (n + 1)
        )
        sign, log_det = np.linalg.slogdet(state.H)

        assert state.k == steps
        assert state.is_positive_definite()
        assert sign == 1
        assert math.isclose(
            log_det, n * math.log(radius**2) + steps * log_step, rel_tol=1e-6
        )

    @pytest.mark.parametrize("seed", range(3))
    def test_convexity(self, seed):
        inst = gen(2, 4, seed)
        rng = np.random.default_rng(seed)

        for _ in range(5):
            z1, z2 = rng.uniform(-2.0, 2.0, size=(2, 2))
            f1, f2 = evaluate_center(inst, z1), evaluate_center(inst, z2)
            g1 = ccb_subgradient(inst, z1)
            tol = 1e-9 * max(1.0, f1, f2)

            assert f2 >= f1 + g1 @ (z2 - z1) - tol
            for t in (0.25, 0.5, 0.75):
                mid = evaluate_center(inst, t * z1 + (1 - t) * z2)
                assert mid <= t * f1 + (1 - t) * f2 + tol
