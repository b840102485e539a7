from .ball import Ball  # noqa: F401
from .files import (  # noqa: F401
    dump_instance,
    dumps_canonical,
    load_instance,
    loads_instance,
    make_result,
)
from .instance import CcbInstance, UqInstance  # noqa: F401
