from .arcs import (  # noqa: F401
    Arc,
    ArcSet,
    arc_decomposition,
    major_arc_index,
    major_arc_shortcut,
)
from .solver import solve_planar  # noqa: F401
from .welzl import Circle, welzl  # noqa: F401
