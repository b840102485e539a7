import math

import numpy as np
import pytest

from cheb_balls.data import Ball, CcbInstance, UqInstance
from cheb_balls.oracle import (
    OracleConfig,
    oracle_ccb,
    oracle_uq,
    sample_boundary,
)
from cheb_balls.uq import example_instance


@pytest.fixture
def lens():
    return CcbInstance([Ball([0, 0], 1), Ball([1, 0], 1)])


class Test_oracle_config:
    def test_default(self):
        cfg = OracleConfig()

        assert cfg.samples == 10_000
        assert cfg.grid_step == 1e-2
        assert cfg.polish

    def test_invalid(self):
        with pytest.raises(TypeError, match="Samples should be int"):
            OracleConfig(samples=True)

        with pytest.raises(ValueError, match="at least 1"):
            OracleConfig(samples=0)

        with pytest.raises(ValueError, match="Grid step"):
            OracleConfig(grid_step=0.0)


class Test_oracle_uq:
    def test_example(self):
        est = oracle_uq(example_instance(0.0))

        assert math.isclose(est.value, 1.0, abs_tol=1e-6)
        assert np.allclose(est.point, [1], atol=1e-6)
        assert est.resolution > 0

    def test_lens(self):
        uq = UqInstance.from_pairs([0, 0], [([0, 0], -4.0), ([3, 0], 5.0)])
        est = oracle_uq(uq)

        assert abs(est.value - 4.0) <= 1e-3
        assert est.value <= 4.0 + 1e-6

    def test_sampled(self):
        # n > 3 uses random samples instead of a grid
        uq = UqInstance.from_pairs(np.zeros(4), [(np.zeros(4), -1.0)])
        est = oracle_uq(uq, OracleConfig(samples=500, seed=2))

        assert est.value <= 1.0 + 1e-6
        assert est.value >= 0.9


class Test_oracle_ccb:
    def test_boundary(self, lens):
        points = sample_boundary(lens, OracleConfig(samples=200))

        assert points.shape == (200, 2)
        dist = np.linalg.norm(points[:, None] - lens.centers, axis=2)
        assert np.all(dist <= 1.0 + 1e-9)
        assert np.allclose(dist.max(axis=1), 1.0, atol=1e-5)

    def test_lens(self, lens):
        est = oracle_ccb(lens, OracleConfig(samples=2000))

        assert est.value <= 0.75 + 1e-4
        assert est.value >= 0.74
        assert np.allclose(est.point, [0.5, 0], atol=0.05)
