"""Canonical JSON interchange for code arrays.

The format is integers-only with a fixed field order (version, v1, v2,
offset_vector, rows); serializing a deserialized document reproduces it
byte for byte. Cell records are {"kind": "info"|"parity"|"empty",
"vertices": [...]}; dual arrays use the same shape with edge-variable ids.
"""

from __future__ import annotations

import json

from .graph import CgrParams
from .layout import EMPTY, INFO, PARITY, Cell, CodeArray, OffsetVector, standard_row_kinds

FORMAT_VERSION = "1"


def to_obj(array: CodeArray) -> dict:
    return {
        "version": FORMAT_VERSION,
        "v1": array.params.v1,
        "v2": array.params.v2,
        "offset_vector": list(array.offsets),
        "rows": [
            [{"kind": cell.kind, "vertices": list(cell.vertices)} for cell in row]
            for row in array.rows
        ],
    }


def to_json(array: CodeArray) -> str:
    return json.dumps(to_obj(array), indent=2) + "\n"


def from_obj(obj: dict) -> CodeArray:
    if not isinstance(obj, dict):
        raise ValueError("code file must be a JSON object")
    version = obj.get("version")
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported format version {version!r} (expected {FORMAT_VERSION!r})")
    try:
        params = CgrParams(int(obj["v1"]), int(obj["v2"]))
    except KeyError as missing:
        raise ValueError(f"missing field {missing}") from None
    offsets = OffsetVector(tuple(int(a) for a in obj.get("offset_vector", ())))
    offsets.validate_for(params)
    raw_rows = obj.get("rows")
    if not isinstance(raw_rows, list) or len(raw_rows) != params.num_rows:
        raise ValueError(f"rows must be a list of {params.num_rows} rows")
    rows = []
    for r, raw_row in enumerate(raw_rows):
        if not isinstance(raw_row, list) or len(raw_row) != params.v2:
            raise ValueError(f"row {r} must have {params.v2} cells")
        row = []
        for raw_cell in raw_row:
            kind = raw_cell.get("kind")
            vertices = tuple(int(v) for v in raw_cell.get("vertices", ()))
            if kind == INFO and len(vertices) == 1:
                row.append(Cell(INFO, vertices))
            elif kind == PARITY and len(vertices) >= 2:
                row.append(Cell(PARITY, vertices))
            elif kind == EMPTY and not vertices:
                row.append(Cell.empty())
            else:
                raise ValueError(f"bad cell {raw_cell!r} in row {r}")
        rows.append(tuple(row))
    return CodeArray(params, tuple(rows), offsets, standard_row_kinds(params))


def from_json(text: str) -> CodeArray:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    return from_obj(obj)


def load(path: str) -> CodeArray:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json(fh.read())


def dump(array: CodeArray, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_json(array))
