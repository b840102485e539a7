import math

import numpy as np
import pytest

from cheb_balls.ccb import (
    approximation_gamma,
    max_center_distance,
    solve_ccb_sqp,
    solve_sqp,
    sqp_certificate,
    sqp_lp_gap,
)
from cheb_balls.cli import gen
from cheb_balls.core import inner_uq
from cheb_balls.data import Ball, CcbInstance
from cheb_balls.errors import GammaNotBelowOneWarning, IterationLimitError
from cheb_balls.lp import uq_lp
from cheb_balls.oracle import oracle_ccb
from cheb_balls.uq import sdp_value


@pytest.fixture
def segment():
    return CcbInstance([Ball([-0.5], math.sqrt(4.25)), Ball([0.5], 0.5)])


@pytest.fixture
def lens():
    return CcbInstance([Ball([0, 0], 1), Ball([1, 0], 1)])


class Test_solve_sqp:
    def test_segment(self, segment):
        res = solve_sqp(segment)

        assert np.allclose(res.lambda_, [0, 1])
        assert np.allclose(res.z_bar, [0.5])
        assert math.isclose(res.value, 0.25)
        assert res.iterations == 0

    def test_lens(self, lens):
        res = solve_sqp(lens)

        assert np.allclose(res.lambda_, [0.5, 0.5])
        assert np.allclose(res.z_bar, [0.5, 0])
        assert math.isclose(res.value, 0.75)
        assert res.stationarity_gap <= 1e-10

    def test_identical(self):
        inst = CcbInstance([Ball([1, 1], 2), Ball([1, 1], 2)])
        res = solve_sqp(inst)

        assert math.isclose(res.value, 4.0)
        assert np.allclose(res.z_bar, [1, 1])

    def test_iteration_limit(self, lens):
        with pytest.raises(IterationLimitError) as info:
            solve_sqp(lens, max_iter=0)

        assert np.allclose(info.value.result.lambda_, [1, 0])


class Test_certificate:
    def test_gamma(self, lens):
        assert max_center_distance(lens) == 1.0
        assert max_center_distance(CcbInstance([Ball([0], 1)])) == 0.0

        gamma, source = approximation_gamma(lens)
        assert math.isclose(gamma, 0.5, abs_tol=1e-6)
        assert source == "cheb_optimal"

    def test_lens(self, lens):
        cert = sqp_certificate(lens)

        assert cert.gamma_below_one
        assert math.isclose(cert.ratio, 0.068227, rel_tol=1e-4)
        assert math.isclose(cert.achieved, 0.75)
        assert math.isclose(cert.upper, 0.75)
        assert cert.lower <= cert.achieved <= cert.upper + 1e-12

    def test_identical(self):
        inst = CcbInstance([Ball([1, 1], 2), Ball([1, 1], 2)])
        cert = sqp_certificate(inst)

        assert math.isclose(cert.ratio, 0.5)
        assert cert.gamma_source == "cheb_optimal"

    def test_no_interior(self):
        # tangent at 1
        inst = CcbInstance([Ball([0], 1), Ball([2], 1)])

        with pytest.warns(GammaNotBelowOneWarning):
            cert = sqp_certificate(inst)

        assert cert.ratio == 0.0
        assert cert.gamma_source == "none"
        assert not cert.gamma_below_one
        assert math.isclose(cert.achieved, 0.0, abs_tol=1e-9)

    def test_to_dict(self, lens):
        dct = sqp_certificate(lens).to_dict()

        assert set(dct) == {
            "gamma",
            "ratio",
            "gamma_source",
            "lower",
            "achieved",
            "upper",
        }

    def test_lp_gap(self, segment, lens):
        assert math.isclose(sqp_lp_gap(segment), 0.0, abs_tol=1e-9)
        assert math.isclose(sqp_lp_gap(lens), 0.0, abs_tol=1e-9)


class Test_solve_ccb_sqp:
    def test_lens(self, lens):
        sol = solve_ccb_sqp(lens)

        assert sol.method == "sqp"
        assert np.allclose(sol.center, [0.5, 0])
        assert math.isclose(sol.squared_radius, 0.75)
        assert sol.certificate_dict()["gamma_source"] == "cheb_optimal"

    def test_lp_strict_off_center(self, segment):
        # away from z_bar the inner LP bound is strictly loose
        for z in (0.2, 0.3, 0.8):
            uq = inner_uq(segment, [z])
            assert sdp_value(uq) < uq_lp(uq).value - 1e-6

        uq = inner_uq(segment, [0.5])
        assert math.isclose(sdp_value(uq), uq_lp(uq).value, abs_tol=1e-9)


class Test_random_instances:
    @pytest.mark.parametrize("seed", range(10))
    def test_sandwich(self, seed):
        inst = gen(2 + seed % 2, 2 + seed % 4, seed)

        sqp = solve_sqp(inst)
        cert = sqp_certificate(inst, sqp)
        est = oracle_ccb(inst)
        tol = 1e-6 * max(1.0, sqp.value)

        assert cert.gamma_below_one
        assert sqp.value >= cert.achieved - tol
        assert cert.achieved >= est.value - est.resolution
        assert est.value - est.resolution >= cert.ratio * sqp.value - 1e-6

    @pytest.mark.parametrize("seed", range(20))
    def test_lp_gap(self, seed):
        inst = gen(2 + seed % 4, 1 + seed % 6, seed)
        sqp = solve_sqp(inst)

        assert abs(sqp_lp_gap(inst, sqp)) <= 1e-6 * max(1.0, sqp.value)
