import json

import numpy as np
import pytest

from cheb_balls.data import (
    Ball,
    CcbInstance,
    UqInstance,
    dump_instance,
    dumps_canonical,
    load_instance,
    loads_instance,
    make_result,
)
from cheb_balls.utils import PROJECT_ROOT

test_dir = PROJECT_ROOT / "tests" / "cli"


class Test_instance_files:
    def test_load(self):
        inst = load_instance(test_dir / "example41.json")

        assert isinstance(inst, CcbInstance)
        assert np.allclose(inst.centers, [[-0.5], [0.5]])
        assert np.allclose(inst.radii**2, [4.25, 0.25])

        uq = load_instance(test_dir / "uq_alpha0.json")
        assert isinstance(uq, UqInstance)
        assert np.array_equal(uq.b, [-4, 0])

    def test_canonical_roundtrip(self, tmp_path):
        inst = CcbInstance([Ball([0.1, -2], 0.3), Ball([1 / 3, 0], 2)])
        text = dump_instance(inst, tmp_path / "inst.json")

        assert (tmp_path / "inst.json").read_text() == text
        assert dump_instance(loads_instance(text)) == text

        # Files on disk are canonical too
        disk = (test_dir / "uq_alpha0.json").read_text(encoding="utf-8")
        assert dump_instance(loads_instance(disk)) == disk

    def test_malformed(self):
        with pytest.raises(json.JSONDecodeError) as exc_info:
            loads_instance('{"kind": "ccb", "balls": [}')
        assert exc_info.value.lineno == 1

        with pytest.raises(ValueError, match="Unknown instance kind"):
            loads_instance('{"kind": "polytope"}')

        with pytest.raises(TypeError, match="JSON object"):
            loads_instance("[1, 2]")


class Test_make_result:
    def test_fields(self):
        result = make_result(
            "planar",
            np.float64(0.75),
            np.array([0.5, 0.0]),
            {"kind": "welzl", "endpoints": np.int64(2)},
            iterations=1,
        )

        assert set(result) == {
            "method",
            "value",
            "point",
            "certificate",
            "status",
            "wall_ms",
            "seed",
            "tolerances",
            "iterations",
        }
        assert result["point"] == [0.5, 0.0]
        assert type(result["certificate"]["endpoints"]) is int

        # Serializable
        assert json.loads(dumps_canonical(result))["value"] == 0.75

    def test_non_finite(self):
        result = make_result("lp", float("inf"), lower=float("nan"))

        assert result["value"] == "inf"
        assert result["lower"] is None
