"""Dataset files: canonical JSON and the ``lo:hi`` CSV grid.

JSON layout::

    {
      "name": "apartments",
      "objects": ["u_1", "u_2"],
      "parameters": ["x_1", "x_2"],
      "grid": [[[0.3, 0.5], [0.6, 0.7]],
               [[0.3, 0.4], [0.4, 0.5]]],
      "baselines": {"MCTDM": ["u_2", "u_1"]}
    }

A baseline entry that is itself an array is a tie group. CSV carries no
name or baselines: the header row is an empty field followed by parameter
labels, and each further row is an object label followed by ``lo:hi`` cells.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .core import Ivfss, build_ivfss
from .decision import RankItem, positions
from .errors import IvfssError, LabelMismatch, MalformedCell, MalformedSyntax, RaggedRow, SchemaViolation

_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


@dataclass(frozen=True)
class Dataset:
    name: str
    ivfss: Ivfss
    baselines: Mapping[str, tuple[RankItem, ...]] = field(default_factory=dict)

    def __post_init__(self):
        checked = {}
        for method, ranking in self.baselines.items():
            ranking = tuple(item if isinstance(item, str) else tuple(item) for item in ranking)
            try:
                places = positions(ranking)
            except LabelMismatch as exc:
                raise SchemaViolation(f"baseline {method!r}: {exc}") from None
            if set(places) != set(self.ivfss.objects):
                raise SchemaViolation(f"baseline {method!r} is not a ranking of the dataset's objects")
            checked[method] = ranking
        object.__setattr__(self, "baselines", checked)


def _reject_constant(name):
    raise MalformedSyntax(f"non-finite number {name} is not allowed")


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _label_list(doc, key):
    value = doc.get(key)
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise SchemaViolation(f'"{key}" must be an array of strings')
    return value


def parse_json(data: bytes | str) -> Dataset:
    """Parse the canonical JSON dataset format."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedSyntax(f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(data, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise MalformedSyntax(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise SchemaViolation("top level must be an object")

    name = doc.get("name", "")
    if not isinstance(name, str):
        raise SchemaViolation('"name" must be a string')
    objects = _label_list(doc, "objects")
    parameters = _label_list(doc, "parameters")

    grid = doc.get("grid")
    if not isinstance(grid, list):
        raise SchemaViolation('"grid" must be an array of rows')
    for i, row in enumerate(grid):
        if not isinstance(row, list):
            raise SchemaViolation(f"grid row {i + 1} is not an array", row=i)
        for j, cell in enumerate(row):
            if not (isinstance(cell, list) and len(cell) == 2 and all(_is_number(x) for x in cell)):
                raise SchemaViolation(
                    f"grid cell at row {i + 1}, column {j + 1} must be a [lo, hi] pair of numbers, got {cell!r}",
                    row=i,
                    col=j,
                )
    ivfss = build_ivfss(objects, parameters, grid)

    baselines = doc.get("baselines", {})
    if not isinstance(baselines, dict):
        raise SchemaViolation('"baselines" must be an object')
    for method, ranking in baselines.items():
        ok = isinstance(ranking, list) and all(
            isinstance(item, str) or (isinstance(item, list) and all(isinstance(x, str) for x in item))
            for item in ranking
        )
        if not ok:
            raise SchemaViolation(f"baseline {method!r} must be an array of labels or arrays of labels")
    return Dataset(name, ivfss, baselines)


def _parse_number(text: str, where: str, i: int, j: int) -> float:
    if not _NUMBER.fullmatch(text):
        raise MalformedCell(f"{where}: {text!r} is not a decimal number", row=i, col=j)
    return float(text)


def parse_csv(data: bytes | str, name: str = "") -> Dataset:
    """Parse the CSV grid format (no quoting; labels may not contain ``,`` or ``:``)."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedSyntax(f"not UTF-8: {exc}") from None
    lines = data.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MalformedSyntax("empty CSV input")

    header = [x.strip() for x in lines[0].rstrip("\r").split(",")]
    if header[0] != "":
        raise MalformedSyntax(f"header must start with an empty field, found {header[0]!r}")
    parameters = header[1:]

    objects = []
    grid = []
    for i, line in enumerate(lines[1:]):
        fields = [x.strip() for x in line.rstrip("\r").split(",")]
        if len(fields) != len(parameters) + 1:
            raise RaggedRow(
                f"line {i + 2} has {len(fields) - 1} cells under a {len(parameters)}-parameter header", row=i
            )
        label = fields[0]
        objects.append(label)
        row = []
        for j, cell in enumerate(fields[1:]):
            where = f"line {i + 2}, cell ({label}, {parameters[j]})"
            parts = cell.split(":")
            if len(parts) != 2:
                raise MalformedCell(f"{where}: expected lo:hi, got {cell!r}", row=i, col=j)
            row.append((_parse_number(parts[0].strip(), where, i, j), _parse_number(parts[1].strip(), where, i, j)))
        grid.append(row)
    try:
        ivfss = build_ivfss(objects, parameters, grid)
    except IvfssError as exc:
        if exc.row is None:
            raise
        raise exc.at(exc.row, exc.col, f"line {exc.row + 2}") from None
    return Dataset(name, ivfss)


def to_dict(ds: Dataset) -> dict:
    doc = {
        "name": ds.name,
        "objects": list(ds.ivfss.objects),
        "parameters": list(ds.ivfss.parameters),
        "grid": [[[c.lo, c.hi] for c in row] for row in ds.ivfss.grid],
    }
    if ds.baselines:
        doc["baselines"] = {
            method: [item if isinstance(item, str) else list(item) for item in ranking]
            for method, ranking in ds.baselines.items()
        }
    return doc


def serialize_json(ds: Dataset) -> bytes:
    # json writes floats with repr(), which round-trips exactly
    return (json.dumps(to_dict(ds), indent=2) + "\n").encode("utf-8")


def serialize_csv(ds: Dataset) -> bytes:
    for label in ds.ivfss.objects + ds.ivfss.parameters:
        if "," in label or ":" in label or label != label.strip():
            raise SchemaViolation(f"label {label!r} cannot be written to CSV")
    lines = [",".join([""] + list(ds.ivfss.parameters))]
    for label, row in zip(ds.ivfss.objects, ds.ivfss.grid):
        lines.append(",".join([label] + [f"{c.lo!r}:{c.hi!r}" for c in row]))
    return ("\n".join(lines) + "\n").encode("utf-8")


def load(path: str | Path, fmt: str | None = None) -> Dataset:
    """Read a dataset file; the format follows the suffix unless ``fmt`` is given."""
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise IvfssError(f"cannot read {path}: {exc.strerror}") from None
    fmt = fmt or ("csv" if path.suffix.lower() == ".csv" else "json")
    if fmt == "csv":
        return parse_csv(data, name=path.stem)
    return parse_json(data)
