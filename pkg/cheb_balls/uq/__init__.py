from .duality import DualityConditionReport, duality_conditions  # noqa: F401
from .enumeration import active_set_count, solve_exact  # noqa: F401
from .rounding import (  # noqa: F401
    approx_round,
    approx_round_recentered,
    approximation_ratio,
)
from .solution import UqCertificate, UqSolution  # noqa: F401
from .trichotomy import (  # noqa: F401
    TrichotomyResult,
    example_instance,
    example_sweep,
    relaxation_report,
    sdp_value,
    trichotomy,
)
