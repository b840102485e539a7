"""Problem instances: Chebyshev center of balls (CC_B) and uniform
quadratic maximization (UQ).

CC_B asks for min_z max_{x in Omega} ||x - z||^2 where Omega is the
intersection of p balls. For a fixed z the inner maximization is a UQ:

    max  f_0(x) = x^T x - 2 a_0^T x
    s.t. f_i(x) = x^T x - 2 a_i^T x + b_i <= 0,   i = 1, ..., p

Each UQ constraint is the ball with center a_i and squared radius
||a_i||^2 - b_i.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, Optional, Sequence

import numpy as np

from cheb_balls.data.ball import Ball
from cheb_balls.errors import DimensionMismatchError
from cheb_balls.utils import as_vector

if TYPE_CHECKING:
    from typing_extensions import Self


class CcbInstance:
    """An ordered list of p >= 1 balls sharing one dimension."""

    def __init__(self, balls: Sequence[Ball], dim: Optional[int] = None):
        self.balls = balls

        if dim is not None and dim != self.dim:
            raise DimensionMismatchError(
                f"Declared dim {dim} differs from ball dim {self.dim}."
            )

    def __len__(self) -> int:
        """Number of balls."""
        return len(self._balls)

    def __iter__(self):
        return iter(self._balls)

    def __str__(self) -> str:
        lines = [f"CcbInstance(n={self.dim}, p={len(self)})"]
        lines.extend(f"  {ball}" for ball in self._balls)

        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CcbInstance):
            return False

        return len(self) == len(other) and all(
            a == b for a, b in zip(self._balls, other.balls)
        )

    @property
    def balls(self) -> list[Ball]:
        return self._balls

    @balls.setter
    def balls(self, balls: Sequence[Ball]):
        if isinstance(balls, Ball) or not isinstance(balls, Iterable):
            raise TypeError("Expect balls as a list of Ball.")

        balls = list(balls)
        if not balls:
            raise ValueError("At least one ball is required.")
        if not all(isinstance(ball, Ball) for ball in balls):
            raise TypeError("Expect balls as a list of Ball.")

        dims = {ball.dim for ball in balls}
        if len(dims) != 1:
            raise DimensionMismatchError(
                f"Balls of different dimensions found: {sorted(dims)}."
            )

        self._balls = balls
        self._centers = np.vstack([ball.center for ball in balls])
        self._radii = np.array([ball.radius for ball in balls])

    @property
    def dim(self) -> int:
        return self._centers.shape[1]

    @property
    def centers(self) -> np.ndarray:
        """Ball centers stacked as a (p, n) array."""
        return self._centers.copy()

    @property
    def radii(self) -> np.ndarray:
        return self._radii.copy()

    def contains(self, point, tol: float = 1e-9) -> bool:
        """Whether point lies in every ball."""
        return all(ball.contains(point, tol) for ball in self._balls)

    def translated(self, shift) -> CcbInstance:
        """Copy with every center moved by shift."""
        shift = as_vector(shift, "shift")
        if shift.size != self.dim:
            raise DimensionMismatchError("Shift has the wrong dimension.")

        return CcbInstance(
            [Ball(ball.center + shift, ball.radius) for ball in self._balls]
        )

    def to_dict(self) -> dict:
        return {
            "kind": "ccb",
            "dim": self.dim,
            "balls": [ball.to_dict() for ball in self._balls],
        }

    @classmethod
    def from_dict(cls, dct: dict) -> Self:
        """Initialize from {"kind": "ccb", "dim": n, "balls": [...]}."""

        if not isinstance(dct, dict):
            raise TypeError("Expect a dict.")
        if dct.get("kind", "ccb") != "ccb":
            raise ValueError(f"Expect kind 'ccb', got {dct.get('kind')!r}.")
        if "balls" not in dct:
            raise ValueError("Missing required arg 'balls'.")
        if not isinstance(dct["balls"], list):
            raise TypeError("Expect 'balls' as a list.")

        return cls([Ball.from_dict(b) for b in dct["balls"]], dct.get("dim"))


class UqInstance:
    """Uniform quadratic maximization instance.

    Attributes:
        a0 (np.ndarray): objective center, shape (n,).
        a (np.ndarray): constraint centers a_i stacked, shape (p, n).
        b (np.ndarray): constraint constants b_i, shape (p,).
    """

    def __init__(self, a0, a, b) -> None:
        self.a0 = a0
        self.set_constraints(a, b)

    def __len__(self) -> int:
        """Number of constraints."""
        return self._b.size

    def __str__(self) -> str:
        lines = [f"UqInstance(n={self.dim}, p={len(self)}, a0={self._a0})"]
        for a_i, b_i in zip(self._a, self._b):
            lines.append(f"  a={a_i}, b={b_i:.6g}")

        return "\n".join(lines)

    @property
    def a0(self) -> np.ndarray:
        return self._a0

    @a0.setter
    def a0(self, a0):
        a0 = as_vector(a0, "a0")
        if hasattr(self, "_a") and a0.size != self._a.shape[1]:
            raise DimensionMismatchError("a0 has the wrong dimension.")

        self._a0 = a0

    @property
    def a(self) -> np.ndarray:
        return self._a

    @property
    def b(self) -> np.ndarray:
        return self._b

    def set_constraints(self, a, b) -> None:
        """Set constraint centers a (p, n) and constants b (p,)."""
        try:
            a = np.array(a, dtype=float)
        except (TypeError, ValueError) as exc:
            raise TypeError("Expect constraint centers as a matrix.") from exc
        b = as_vector(b, "b")

        if a.ndim == 1 and self._a0.size == 1:
            a = a.reshape(-1, 1)
        if a.ndim != 2 or a.shape[0] != b.size:
            raise DimensionMismatchError(
                "Expect one center row per constraint constant."
            )
        if a.shape[1] != self._a0.size:
            raise DimensionMismatchError(
                f"Constraint dim {a.shape[1]} differs from a0 dim "
                f"{self._a0.size}."
            )
        if b.size == 0:
            raise ValueError("At least one constraint is required.")
        if not np.all(np.isfinite(a)):
            raise ValueError("Non-finite entry found in constraint centers.")

        self._a = a
        self._b = b

    @property
    def dim(self) -> int:
        return self._a0.size

    @property
    def constraints(self) -> list[tuple[np.ndarray, float]]:
        """Constraints as (a_i, b_i) pairs."""
        return [(a_i.copy(), float(b_i)) for a_i, b_i in zip(self._a, self._b)]

    def _check_points(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape[-1] != self.dim:
            raise DimensionMismatchError(
                f"Point dim {x.shape[-1]} differs from instance dim "
                f"{self.dim}."
            )

        return x

    def objective(self, x):
        """f_0(x) = x^T x - 2 a_0^T x, for one point or a stack of points."""
        x = self._check_points(x)

        return np.sum(x * x, axis=-1) - 2.0 * x @ self._a0

    def constraint_values(self, x) -> np.ndarray:
        """f_i(x) for all i; shape (p,) or (m, p) for stacked points."""
        x = self._check_points(x)
        sq = np.sum(x * x, axis=-1)

        return np.expand_dims(sq, -1) - 2.0 * x @ self._a.T + self._b

    def ball_radii(self) -> np.ndarray:
        """Radii of the constraint balls; NaN where ||a_i||^2 - b_i <= 0."""
        sq = np.sum(self._a**2, axis=1) - self._b
        radii = np.full(sq.shape, np.nan)
        radii[sq > 0] = np.sqrt(sq[sq > 0])

        return radii

    def to_ccb(self) -> CcbInstance:
        """Constraint set as balls (center a_i, radius sqrt(||a_i||^2-b_i)).

        Raises:
            ValueError: if some constraint set is empty or a single point.
        """

        radii = self.ball_radii()
        if np.any(np.isnan(radii)):
            raise ValueError("Constraint with empty interior found.")

        return CcbInstance([Ball(c, r) for c, r in zip(self._a, radii)])

    def to_dict(self) -> dict:
        return {
            "kind": "uq",
            "dim": self.dim,
            "a0": self._a0.tolist(),
            "constraints": [
                {"a": a_i.tolist(), "b": float(b_i)}
                for a_i, b_i in zip(self._a, self._b)
            ],
        }

    @classmethod
    def from_pairs(cls, a0, pairs: Iterable[tuple]) -> Self:
        """Initialize from a0 and an iterable of (a_i, b_i) pairs."""
        pairs = list(pairs)
        if not pairs:
            raise ValueError("At least one constraint is required.")
        a0 = as_vector(a0, "a0")

        a = [np.atleast_1d(np.asarray(a_i, dtype=float)) for a_i, _ in pairs]

        return cls(a0, np.vstack(a), [b_i for _, b_i in pairs])

    @classmethod
    def from_dict(cls, dct: dict) -> Self:
        """Initialize from {"kind": "uq", "dim": n, "a0": [...],
        "constraints": [{"a": [...], "b": b}, ...]}.
        """

        if not isinstance(dct, dict):
            raise TypeError("Expect a dict.")
        if dct.get("kind", "uq") != "uq":
            raise ValueError(f"Expect kind 'uq', got {dct.get('kind')!r}.")

        try:
            a0 = dct["a0"]
            constraints = dct["constraints"]
        except KeyError as exc:
            raise ValueError(f"Missing required arg {exc}.") from exc

        if not isinstance(constraints, list):
            raise TypeError("Expect 'constraints' as a list.")
        try:
            pairs = [(c["a"], c["b"]) for c in constraints]
        except (KeyError, TypeError) as exc:
            raise ValueError(
                "Expect each constraint as {'a': [...], 'b': b}."
            ) from exc

        instance = cls.from_pairs(a0, pairs)
        if "dim" in dct and dct["dim"] != instance.dim:
            raise DimensionMismatchError(
                f"Declared dim {dct['dim']} differs from data dim "
                f"{instance.dim}."
            )

        return instance
