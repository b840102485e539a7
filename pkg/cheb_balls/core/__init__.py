from .bridge import feasible, inner_uq, recenter  # noqa: F401
from .ellipsoid import (  # noqa: F401
    EllipsoidState,
    bisection_minimize,
    ellipsoid_iterations,
    ellipsoid_minimize,
)
from .interior import (  # noqa: F401
    InteriorCertificate,
    find_interior_point,
    validate,
)
