import numpy as np

from cheb_balls.cli import gen_uq
from cheb_balls.data import UqInstance
from cheb_balls.uq import duality_conditions, example_instance
from cheb_balls.uq.duality import nontrivial_cone


class Test_duality_conditions:
    def test_example(self):
        report = duality_conditions(example_instance(0.0))

        assert not report.cond_i
        assert not report.cond_ii
        assert not report.strong_duality_guaranteed

    def test_outside_hull(self):
        report = duality_conditions(example_instance(2.0))

        assert report.cond_i
        assert report.cond_ii
        assert report.to_dict() == {
            "cond_i": True,
            "cond_ii": True,
            "strong_duality_guaranteed": True,
        }

    def test_cone_only(self):
        uq = UqInstance.from_pairs([0, 0], [([-1, 0], -3.0), ([1, 0], -3.0)])
        report = duality_conditions(uq)

        assert not report.cond_i
        assert report.cond_ii

    def test_nontrivial_cone(self):
        assert nontrivial_cone(np.array([[1.0, 0.0]]))
        assert not nontrivial_cone(np.array([[1.0], [-1.0]]))
        assert not nontrivial_cone(
            np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, -1.0]])
        )

    def test_fewer_constraints_than_dim(self):
        # a nonzero vector orthogonal to every a_i - a_0 always exists
        for seed in range(3):
            uq = gen_uq(3, 2, seed=seed)

            assert duality_conditions(uq).cond_ii
