from .relaxation import (  # noqa: F401
    dlp_problem,
    lp_point,
    lp_problem,
    uq_dlp,
    uq_lp,
)
from .simplex import LpOutcome, LpProblem, simplex  # noqa: F401
