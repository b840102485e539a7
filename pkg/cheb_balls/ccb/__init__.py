from cheb_balls.core.ellipsoid import EllipsoidState  # noqa: F401

from .center import (  # noqa: F401
    CcbSolution,
    ccb_subgradient,
    evaluate_center,
    inner_solution,
    solve_ccb_ellipsoid,
)
from .sqp import (  # noqa: F401
    RatioCertificate,
    SqpResult,
    approximation_gamma,
    max_center_distance,
    solve_ccb_sqp,
    solve_sqp,
    sqp_certificate,
    sqp_lp_gap,
)
