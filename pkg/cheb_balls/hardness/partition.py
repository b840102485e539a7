"""Partition as a Chebyshev-center instance.

For integers a_1..a_n, the problem

    max x^T x  s.t.  x^T x +- x_i <= n + 1,  x^T x +- a^T x <= n

has optimal value n iff some x in {-1, 1}^n has a^T x = 0. Completing
squares turns each constraint into a ball, so the instances are hard
inputs for the center solvers. The feasible set is symmetric about the
origin, which is then its Chebyshev center.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Optional, Sequence

import numpy as np
import pandas as pd

from cheb_balls.ccb import solve_ccb_ellipsoid
from cheb_balls.data import CcbInstance, UqInstance
from cheb_balls.errors import BudgetExceededError
from cheb_balls.uq import solve_exact
from cheb_balls.utils import ENUM_BUDGET

if TYPE_CHECKING:
    from typing_extensions import Self

# sign vectors checked per vectorized batch
CHUNK = 1 << 16

# largest n for exhaustive search
MAX_BRUTE_DIM = 30

# absolute tolerance of v(P0) = n
VALUE_TOL = 1e-6


class PartitionInput:
    """Integer vector a of a partition question a^T x = 0."""

    def __init__(self, a: Sequence[int]) -> None:
        self.a = a

    def __str__(self) -> str:
        return f"PartitionInput({self._a.tolist()})"

    def __len__(self) -> int:
        return self._a.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartitionInput):
            return False
        return np.array_equal(self._a, other._a)

    @property
    def a(self) -> np.ndarray:
        return self._a.copy()

    @a.setter
    def a(self, a: Sequence[int]):
        values = list(np.asarray(a).ravel())
        if not values:
            raise ValueError("At least one integer is required.")

        for value in values:
            if isinstance(value, (bool, np.bool_)):
                raise TypeError("Expect a as a sequence of integers.")
            if not float(value).is_integer():
                raise TypeError("Expect a as a sequence of integers.")

        self._a = np.array([int(v) for v in values], dtype=np.int64)

    @property
    def dim(self) -> int:
        return self._a.size

    @classmethod
    def from_str(cls, text: str) -> Self:
        """Parse comma or whitespace separated integers, e.g. "1,1,2"."""
        tokens = text.replace(",", " ").split()
        try:
            return cls([int(t) for t in tokens])
        except ValueError as exc:
            raise TypeError(f"Expect integers, got '{text}'.") from exc


def _as_input(a) -> PartitionInput:
    return a if isinstance(a, PartitionInput) else PartitionInput(a)


def reduce_to_p0(a) -> tuple[UqInstance, CcbInstance]:
    """The 2n + 2 constraints in UQ form and as balls.

    Constraint order: x^T x + x_i (i = 1..n), x^T x - x_i (i = 1..n),
    x^T x - a^T x, x^T x + a^T x.
    """

    a = _as_input(a).a.astype(float)
    n = a.size
    eye = np.eye(n)

    pairs = [(-0.5 * eye[i], -(1.0 + n)) for i in range(n)]
    pairs += [(0.5 * eye[i], -(1.0 + n)) for i in range(n)]
    pairs += [(0.5 * a, -float(n)), (-0.5 * a, -float(n))]

    uq = UqInstance.from_pairs(np.zeros(n), pairs)

    return uq, uq.to_ccb()


def _signs(indices: np.ndarray, n: int) -> np.ndarray:
    """Sign vectors in itertools.product((1, -1), repeat=n) order."""
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    bits = (indices[:, None] >> shifts) & 1
    return 1 - 2 * bits


def partition_bruteforce(a) -> Optional[tuple[int, ...]]:
    """First x in {-1, 1}^n with a^T x = 0, or None.

    Sign vectors are scanned in lexicographic order with +1 before -1.

    Raises:
        BudgetExceededError: if n > 30.
    """

    a = _as_input(a).a
    n = a.size
    if n > MAX_BRUTE_DIM:
        raise BudgetExceededError(
            f"Exhaustive partition search needs 2^{n} sign vectors, "
            f"limit is 2^{MAX_BRUTE_DIM}."
        )

    total = 1 << n
    for start in range(0, total, CHUNK):
        stop = min(start + CHUNK, total)
        indices = np.arange(start, stop, dtype=np.int64)
        signs = _signs(indices, n)
        hits = np.flatnonzero(signs @ a == 0)
        if hits.size:
            return tuple(int(s) for s in signs[hits[0]])

    return None


@dataclass(frozen=True)
class LemmaReport:
    """Outcome of comparing v(P0) = n with a partition search.

    Attributes:
        value (float): v(P0) from exact enumeration.
        partition (tuple, optional): sign vector found by brute force.
        center (np.ndarray, optional): ellipsoid center, when requested.
    """

    a: tuple
    n: int
    value: float
    partition: Optional[tuple]
    center: Optional[np.ndarray] = None
    center_eps: Optional[float] = None

    @property
    def attains_n(self) -> bool:
        return abs(self.value - self.n) <= VALUE_TOL

    @property
    def partition_exists(self) -> bool:
        return self.partition is not None

    @property
    def consistent(self) -> bool:
        return self.attains_n == self.partition_exists

    @property
    def center_norm(self) -> Optional[float]:
        if self.center is None:
            return None
        return float(np.linalg.norm(self.center))

    @property
    def center_at_origin(self) -> Optional[bool]:
        """||z|| <= sqrt(eps): f(z) >= v + ||z||^2 on symmetric sets."""
        if self.center is None:
            return None
        return self.center_norm <= math.sqrt(self.center_eps) + 1e-9

    def to_dict(self) -> dict:
        return {
            "a": list(self.a),
            "n": self.n,
            "value": self.value,
            "attains_n": self.attains_n,
            "partition": (
                None if self.partition is None else list(self.partition)
            ),
            "consistent": self.consistent,
            "center": (
                None if self.center is None else self.center.tolist()
            ),
            "center_at_origin": self.center_at_origin,
        }


def check_lemma_cp(
    a,
    budget: int = ENUM_BUDGET,
    check_center: bool = False,
    eps: float = 1e-4,
) -> LemmaReport:
    """v(P0) by enumeration against brute-force partition.

    With check_center, also runs solve_ccb_ellipsoid on the balls; the
    center should be the origin.

    Raises:
        BudgetExceededError: if the enumeration is over budget.
    """

    inp = _as_input(a)
    uq, ccb = reduce_to_p0(inp)
    value = solve_exact(uq, budget=budget).value

    center = None
    if check_center:
        center = solve_ccb_ellipsoid(ccb, eps=eps, budget=budget).center

    return LemmaReport(
        a=tuple(int(v) for v in inp.a),
        n=inp.dim,
        value=value,
        partition=partition_bruteforce(inp),
        center=center,
        center_eps=eps if check_center else None,
    )


def random_partition_inputs(
    n: int, count: int, seed: int = 0, max_abs: int = 20
) -> list[PartitionInput]:
    """count random inputs with entries in [1, max_abs]."""
    rng = np.random.default_rng(seed)
    return [
        PartitionInput(rng.integers(1, max_abs + 1, size=n))
        for _ in range(count)
    ]


def lemma_sweep(
    inputs: Iterable, budget: int = ENUM_BUDGET
) -> pd.DataFrame:
    """check_lemma_cp over many inputs, one row each."""
    rows = []
    for a in inputs:
        report = check_lemma_cp(a, budget=budget)
        rows.append(
            {
                "a": ",".join(str(v) for v in report.a),
                "n": report.n,
                "value": report.value,
                "attains_n": report.attains_n,
                "partition_exists": report.partition_exists,
                "consistent": report.consistent,
            }
        )

    return pd.DataFrame(rows)
