import math

import numpy as np
import pytest

from cheb_balls.cli import gen_uq
from cheb_balls.data import UqInstance
from cheb_balls.lp import uq_dlp, uq_lp
from cheb_balls.uq import (
    duality_conditions,
    example_instance,
    example_sweep,
    relaxation_report,
    sdp_value,
    solve_exact,
    trichotomy,
)


class Test_trichotomy:
    def test_case_b(self):
        tri = trichotomy(example_instance(0.0))

        assert tri.case == "B"
        assert not tri.is_unbounded
        assert math.isclose(tri.lp_value, 2.0)

        x, y = tri.lp_point
        assert np.allclose(x, [2])
        assert math.isclose(y, 2.0)

    def test_case_a(self):
        # balls ((-1), 1) and ((1), 1) touch at the origin
        uq = UqInstance.from_pairs([0], [([-1], 0.0), ([1], 0.0)])
        tri = trichotomy(uq)

        assert tri.case == "A"
        assert math.isclose(tri.lp_value, 0.0, abs_tol=1e-12)

    def test_case_c(self):
        uq = UqInstance.from_pairs([0, 0], [([-1, 0], -3.0), ([1, 0], -3.0)])
        tri = trichotomy(uq)

        assert tri.case == "C"
        assert math.isclose(tri.lp_value, 3.0)
        assert math.isclose(sdp_value(uq), 3.0)

    def test_unbounded(self):
        tri = trichotomy(example_instance(2.0))

        assert tri.is_unbounded
        assert tri.lp_point is None
        assert tri.lp_value == math.inf


class Test_relaxation_values:
    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5])
    def test_sdp_value(self, alpha):
        assert math.isclose(sdp_value(example_instance(alpha)), 1 - alpha)

    def test_report(self):
        report = relaxation_report(example_instance(0.0))

        assert math.isclose(report["lp"], 2.0)
        assert report["trichotomy"] == "B"
        assert math.isclose(report["sdp"], 1.0)
        assert math.isclose(report["uq"], 1.0)
        assert not report["duality"]["strong_duality_guaranteed"]

    def test_report_unbounded(self):
        report = relaxation_report(example_instance(2.0))

        assert report["lp"] == math.inf
        assert report["trichotomy"] == "unbounded"
        assert math.isclose(report["sdp"], report["uq"])
        assert math.isclose(report["uq"], 0.0, abs_tol=1e-12)
        assert report["duality"]["cond_i"]

    def test_sweep(self):
        df = example_sweep([-0.5, 0.0, 0.5])

        assert list(df.index) == [-0.5, 0.0, 0.5]
        assert list(df.columns) == ["lp", "trichotomy", "sdp", "uq"]
        assert np.allclose(df["lp"], [3.0, 2.0, 1.0])
        assert np.allclose(df["sdp"], [1.5, 1.0, 0.5])
        assert np.allclose(df["sdp"], df["uq"])
        assert (df["trichotomy"] == "B").all()


def _sizes(seed: int, max_extra: int) -> tuple[int, int]:
    n = 2 + seed % 3
    return n, 1 + seed % (n + max_extra)


class Test_random_instances:
    @pytest.mark.parametrize("seed", range(40))
    def test_sdp_tight_few_constraints(self, seed):
        n = 2 + seed % 4
        p = 1 + (seed // 4) % n

        for bounded in (False, True):
            uq = gen_uq(n, p, seed, bounded=bounded)
            exact = solve_exact(uq).value

            assert math.isclose(
                sdp_value(uq), exact, rel_tol=1e-6, abs_tol=1e-9
            )

    @pytest.mark.parametrize("seed", range(30))
    def test_value_order(self, seed):
        n, p = _sizes(seed, 3)
        uq = gen_uq(n, p, seed, bounded=seed % 3 != 0)

        exact = solve_exact(uq).value
        sdp = sdp_value(uq)
        tri = trichotomy(uq)
        tol = 1e-9 * max(1.0, abs(exact))

        assert exact <= sdp + tol
        assert sdp <= tri.lp_value + tol

        if duality_conditions(uq).strong_duality_guaranteed:
            assert math.isclose(sdp, exact, rel_tol=1e-6, abs_tol=1e-9)

    @pytest.mark.parametrize("seed", range(20))
    def test_dual_value(self, seed):
        n, p = _sizes(seed, 3)
        uq = gen_uq(n, p, seed, bounded=seed % 2 == 0)

        primal, dual = uq_lp(uq), uq_dlp(uq)

        if primal.status == "unbounded":
            assert dual.status == "infeasible"
        else:
            assert dual.is_optimal
            assert math.isclose(
                primal.value, dual.value, rel_tol=1e-9, abs_tol=1e-9
            )

    @pytest.mark.parametrize("seed", range(10))
    def test_permutation(self, seed):
        uq = gen_uq(2 + seed % 2, 5, seed, bounded=seed % 2 == 0)
        order = np.random.default_rng(seed).permutation(len(uq))
        permuted = UqInstance(uq.a0, uq.a[order], uq.b[order])

        assert math.isclose(
            solve_exact(permuted).value,
            solve_exact(uq).value,
            rel_tol=1e-9,
            abs_tol=1e-9,
        )
        assert math.isclose(
            sdp_value(permuted), sdp_value(uq), rel_tol=1e-7, abs_tol=1e-9
        )
