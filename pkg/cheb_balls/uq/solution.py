"""Result types shared by the UQ solvers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np

CertificateKind = Literal[
    "exact_enumeration", "exact_lp_tight", "approx_ratio", "oracle_fallback"
]


@dataclass(frozen=True)
class UqCertificate:
    """Why a UqSolution is trustworthy.

    Attributes:
        kind: exact_enumeration (active_set/root identify the candidate),
            exact_lp_tight (LP optimum attains x^T x = y), approx_ratio
            (value >= ratio * bound), or oracle_fallback.
    """

    kind: CertificateKind
    active_set: Optional[tuple[int, ...]] = None
    root: Optional[int] = None
    ratio: Optional[float] = None
    bound: Optional[float] = None

    def to_dict(self) -> dict:
        dct = {"kind": self.kind}
        if self.active_set is not None:
            dct["active_set"] = list(self.active_set)
            dct["root"] = self.root
        if self.ratio is not None:
            dct["ratio"] = self.ratio
        if self.bound is not None:
            dct["bound"] = self.bound

        return dct


@dataclass(frozen=True)
class UqSolution:
    """A feasible point of UQ with its objective value."""

    x: np.ndarray
    value: float
    certificate: UqCertificate
    upper_bound: float = math.inf
    examined: int = 0

    def __str__(self) -> str:
        return (
            f"UqSolution(value={self.value:.10g}, x={self.x}, "
            f"certificate={self.certificate.kind}, "
            f"upper_bound={self.upper_bound:.10g})"
        )
