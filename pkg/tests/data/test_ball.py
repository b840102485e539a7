import math

import numpy as np
import pytest

from cheb_balls.data.ball import Ball


class Test_ball:
    def test_init(self):
        ball = Ball([1, 2], 3)

        assert np.array_equal(ball.center, [1.0, 2.0])
        assert ball.radius == 3.0
        assert ball.dim == 2
        assert ball.squared_radius == 9.0

        # Test __str__
        assert str(ball) == "Ball((1, 2), r=3)"

    def test_invalid_radius(self):
        with pytest.raises(TypeError, match="Radius should be float"):
            Ball([0], "1")

        with pytest.raises(TypeError, match="Radius should be float"):
            Ball([0], True)

        for radius in (0, -1.0, math.inf, math.nan):
            with pytest.raises(ValueError, match="positive and finite"):
                Ball([0], radius)

    def test_invalid_center(self):
        with pytest.raises(ValueError, match="at least one coordinate"):
            Ball([], 1.0)

        with pytest.raises(ValueError, match="1-D vector"):
            Ball([[0, 1]], 1.0)

        with pytest.raises(ValueError, match="Non-finite entry"):
            Ball([0, math.nan], 1.0)

        with pytest.raises(TypeError, match="Expect center"):
            Ball(["a"], 1.0)

    def test_contains(self):
        ball = Ball([0, 0], 1)

        assert ball.contains([1, 0])
        assert ball.contains([0.6, 0.8])
        assert not ball.contains([1.001, 0])

    def test_eq(self):
        assert Ball([0, 0], 1) == Ball([0.0, 0.0], 1.0)
        assert Ball([0, 0], 1) != Ball([0, 0], 2)
        assert Ball([0], 1) != Ball([0, 0], 1)
        assert Ball([0], 1) != "Ball((0), r=1)"

    def test_dict(self):
        ball = Ball([0.5, -1], 2)

        assert ball.to_dict() == {"center": [0.5, -1.0], "radius": 2.0}
        assert Ball.from_dict(ball.to_dict()) == ball

        with pytest.raises(ValueError, match="Missing required arg"):
            Ball.from_dict({"center": [0]})

        with pytest.raises(TypeError, match="Expect a dict"):
            Ball.from_dict([0, 1])
