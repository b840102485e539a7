from .generator import gen, gen_uq  # noqa: F401
from .main import build_parser, main, run  # noqa: F401
