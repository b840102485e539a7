"""JSON instance and result files.

Files are canonical: sorted keys, two-space indent and Python's
shortest round-trip float repr, so dumping a loaded canonical file
reproduces it byte for byte.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional, Union

import numpy as np

from cheb_balls.data.instance import CcbInstance, UqInstance

Instance = Union[CcbInstance, UqInstance]


def _plain(obj: Any) -> Any:
    """Convert numpy scalars/arrays nested in obj to plain Python."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        obj = float(obj)
    if isinstance(obj, float) and not np.isfinite(obj):
        return None if np.isnan(obj) else ("inf" if obj > 0 else "-inf")

    return obj


def dumps_canonical(obj: Any) -> str:
    """Canonical JSON text (trailing newline included)."""
    return json.dumps(_plain(obj), sort_keys=True, indent=2) + "\n"


def instance_from_dict(dct: dict) -> Instance:
    """Dispatch on the "kind" field."""
    if not isinstance(dct, dict):
        raise TypeError("Expect a JSON object at top level.")

    kind = dct.get("kind")
    if kind == "ccb":
        return CcbInstance.from_dict(dct)
    if kind == "uq":
        return UqInstance.from_dict(dct)

    raise ValueError(f"Unknown instance kind {kind!r}.")


def loads_instance(text: str) -> Instance:
    """Parse instance JSON text.

    Raises:
        json.JSONDecodeError: malformed JSON (carries line/column).
        ValueError, TypeError: schema violations.
    """

    return instance_from_dict(json.loads(text))


def load_instance(path: Union[str, Path]) -> Instance:
    return loads_instance(Path(path).read_text(encoding="utf-8"))


def dump_instance(
    instance: Instance, path: Optional[Union[str, Path]] = None
) -> str:
    """Canonical JSON for an instance, optionally written to path."""
    text = dumps_canonical(instance.to_dict())

    if path is not None:
        Path(path).write_text(text, encoding="utf-8")

    return text


def make_result(
    method: str,
    value: Optional[float],
    point=None,
    certificate: Optional[dict] = None,
    status: str = "ok",
    wall_ms: float = 0.0,
    seed: Optional[int] = None,
    tolerances: Optional[dict] = None,
    **extra: Any,
) -> dict:
    """Assemble a result document.

    Extra keyword arguments become additional top-level fields.
    """

    result = {
        "method": method,
        "value": value,
        "point": None if point is None else np.asarray(point).tolist(),
        "certificate": certificate or {},
        "status": status,
        "wall_ms": wall_ms,
        "seed": seed,
        "tolerances": tolerances or {},
    }
    result.update(extra)

    return _plain(result)
