"""JSON interchange format for code arrays."""

from __future__ import annotations

import json

import pytest

from cgrcode import dualize
from cgrcode.codespec import FORMAT_VERSION, dump, from_json, from_obj, load, to_json, to_obj
from conftest import builtin_array


def test_object_shape(k2_array):
    obj = to_obj(k2_array)
    assert list(obj) == ["version", "v1", "v2", "offset_vector", "rows"]
    assert obj["version"] == FORMAT_VERSION == "1"
    assert obj["v1"] == 2 and obj["v2"] == 5
    assert obj["offset_vector"] == [0, 1, 2, 2, 4]
    assert obj["rows"][0][0] == {"kind": "info", "vertices": [0]}
    assert obj["rows"][2][2] == {"kind": "parity", "vertices": [4, 0]}


def test_json_round_trip_is_byte_stable(k2_array):
    text = to_json(k2_array)
    assert text.endswith("\n")
    assert from_json(text) == k2_array
    assert to_json(from_json(text)) == text


@pytest.mark.parametrize("name", ["k4_c7_a", "k6_c9_a", "k8_c11"])
def test_json_round_trip_other_sizes(name):
    array = builtin_array(name)
    text = to_json(array)
    assert from_json(text) == array
    assert to_json(from_json(text)) == text


def test_dual_arrays_serialize(k2_array):
    dual = dualize(k2_array)
    text = to_json(dual)
    restored = from_json(text)
    assert restored == dual
    assert restored.is_dual()


def test_file_round_trip(tmp_path, k2_array):
    path = tmp_path / "code.json"
    dump(k2_array, path)
    assert load(path) == k2_array


def _mutated(k2_array, mutate):
    obj = json.loads(to_json(k2_array))
    mutate(obj)
    return obj


@pytest.mark.parametrize(
    "mutate",
    [
        lambda o: o.update(version="2"),
        lambda o: o.update(v1=3),
        lambda o: o.update(v2=6),
        lambda o: o["offset_vector"].__setitem__(0, 9),
        lambda o: o["offset_vector"].pop(),
        lambda o: o["rows"].pop(),
        lambda o: o["rows"][0].pop(),
        lambda o: o["rows"][0][0].update(kind="weird"),
        lambda o: o["rows"][0][0].update(vertices=[1, 2]),
        lambda o: o["rows"][2][0].update(vertices=[3]),
    ],
)
def test_validation_rejects_malformed_objects(k2_array, mutate):
    with pytest.raises(ValueError):
        from_obj(_mutated(k2_array, mutate))
