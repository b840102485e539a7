from .brute import (  # noqa: F401
    OracleConfig,
    OracleEstimate,
    oracle_ccb,
    oracle_uq,
    sample_boundary,
)
