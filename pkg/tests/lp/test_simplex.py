import math

import numpy as np
import pytest

from cheb_balls.errors import DimensionMismatchError
from cheb_balls.lp import LpProblem, simplex


class Test_lp_problem:
    def test_init(self):
        problem = LpProblem([1, 1], [[1, 0], [0, 1]], [1, 2])

        assert problem.num_vars == 2
        assert problem.senses == ["<=", "<="]
        assert not problem.free.any()
        assert problem.maximize

        # Test __str__
        assert str(problem).startswith("max")

    def test_invalid(self):
        with pytest.raises(DimensionMismatchError, match="one rhs per row"):
            LpProblem([1, 1], [[1, 0], [0, 1]], [1])

        with pytest.raises(DimensionMismatchError, match="one sense"):
            LpProblem([1], [[1]], [1], ["<=", "<="])

        with pytest.raises(ValueError, match="Unknown row sense"):
            LpProblem([1], [[1]], [1], ["<"])

        with pytest.raises(ValueError, match="Non-finite LP data"):
            LpProblem([1], [[np.inf]], [1])

        with pytest.raises(DimensionMismatchError, match="one free flag"):
            LpProblem([1, 1], free=[True])

        with pytest.raises(TypeError, match="Maximize should be boolean"):
            LpProblem([1], maximize=1)

    def test_residual(self):
        problem = LpProblem([1, 1], [[1, 1]], [1], ["=="])

        assert problem.residual([0.5, 0.5]) == 0.0
        assert math.isclose(problem.residual([1, 1]), 1.0)
        assert math.isclose(problem.residual([2, -1]), 1.0)


class Test_simplex:
    def test_optimal(self):
        outcome = simplex(LpProblem([1, 1], [[1, 0], [0, 1]], [1, 2]))

        assert outcome.is_optimal
        assert np.allclose(outcome.x, [1, 2])
        assert math.isclose(outcome.value, 3.0)
        assert np.allclose(outcome.duals, [1, 1])

    def test_minimize_equality(self):
        problem = LpProblem(
            [1, 2], [[1, 1]], [1], ["=="], maximize=False
        )
        outcome = simplex(problem)

        assert outcome.is_optimal
        assert np.allclose(outcome.x, [1, 0])
        assert math.isclose(outcome.value, 1.0)
        assert problem.residual(outcome.x) <= 1e-12

    def test_greater_equal(self):
        # min x + y s.t. x + 2y >= 2, 2x + y >= 2
        problem = LpProblem(
            [1, 1], [[1, 2], [2, 1]], [2, 2], [">=", ">="], maximize=False
        )
        outcome = simplex(problem)

        assert np.allclose(outcome.x, [2 / 3, 2 / 3])
        assert math.isclose(outcome.value, 4 / 3)
        assert math.isclose(outcome.duals @ problem.rhs, outcome.value)

    def test_infeasible(self):
        outcome = simplex(LpProblem([1], [[1]], [-1]))

        assert outcome.status == "infeasible"
        assert outcome.x is None
        assert math.isnan(outcome.value)

    def test_unbounded(self):
        outcome = simplex(LpProblem([1], [[-1]], [1]))

        assert outcome.status == "unbounded"
        assert outcome.value == math.inf
        assert np.allclose(outcome.ray, [1])

    def test_free(self):
        # max -x s.t. x >= -3 with x free
        outcome = simplex(LpProblem([-1], [[1]], [-3], [">="], free=True))

        assert outcome.is_optimal
        assert np.allclose(outcome.x, [-3])
        assert math.isclose(outcome.value, 3.0)

    def test_deterministic(self):
        problem = LpProblem([1, 1], [[1, 1], [1, 0]], [1, 1])
        first, second = simplex(problem), simplex(problem)

        assert np.array_equal(first.x, second.x)
        assert first.pivots == second.pivots

    def test_invalid(self):
        with pytest.raises(TypeError, match="Expect an LpProblem"):
            simplex({"objective": [1]})
