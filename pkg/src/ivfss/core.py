"""Intervals, the interval-valued fuzzy soft set grid and its value matrices."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DuplicateLabel,
    EmptyParameters,
    EmptyUniverse,
    Inverted,
    OutOfRange,
    ShapeMismatch,
    UniverseTooSmall,
    UnknownLabel,
)


@dataclass(frozen=True)
class Interval:
    """Closed membership interval ``[lo, hi]`` inside ``[0, 1]``."""

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = self.lo, self.hi
        if isinstance(lo, bool) or isinstance(hi, bool):
            raise OutOfRange(f"membership bounds must be numbers, got {lo!r}, {hi!r}")
        try:
            lo = float(lo)
            hi = float(hi)
        except (TypeError, ValueError):
            raise OutOfRange(f"membership bounds must be numbers, got {self.lo!r}, {self.hi!r}") from None
        # NaN fails every comparison below, so test it explicitly
        if math.isnan(lo) or math.isnan(hi) or lo < 0.0 or hi > 1.0:
            raise OutOfRange(f"interval [{lo!r}, {hi!r}] is not inside [0, 1]")
        if lo > hi:
            raise Inverted(f"lower bound {lo!r} exceeds upper bound {hi!r}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __str__(self):
        return f"[{self.lo!r}, {self.hi!r}]"


def make_interval(lo: float, hi: float) -> Interval:
    """Build an :class:`Interval`, raising ``OutOfRange`` or ``Inverted`` on bad bounds."""
    return Interval(lo, hi)


class Bound(enum.Enum):
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class ValueMatrix:
    """Real ``rows x cols`` matrix of lower (``MIN``) or upper (``MAX``) endpoints."""

    kind: Bound
    entries: tuple[tuple[float, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def tolist(self) -> list[list[float]]:
        return [list(row) for row in self.entries]


def _check_labels(labels: Sequence[str], what: str) -> tuple[str, ...]:
    labels = tuple(labels)
    seen = set()
    for i, label in enumerate(labels):
        if not isinstance(label, str):
            raise DuplicateLabel(f"{what} label at position {i} is not a string: {label!r}")
        if label in seen:
            raise DuplicateLabel(f"duplicate {what} label {label!r}")
        seen.add(label)
    return labels


@dataclass(frozen=True)
class Ivfss:
    """Interval-valued fuzzy soft set in tabular form.

    ``grid[i][j]`` is the membership interval of ``objects[i]`` under
    ``parameters[j]``. Row and column order is kept exactly as given.
    Construct through :func:`build_ivfss` or directly; both validate.
    """

    objects: tuple[str, ...]
    parameters: tuple[str, ...]
    grid: tuple[tuple[Interval, ...], ...]

    def __post_init__(self):
        objects = tuple(self.objects)
        parameters = tuple(self.parameters)
        if not objects:
            raise EmptyUniverse("the universe has no objects")
        if not parameters:
            raise EmptyParameters("the parameter set is empty")
        _check_labels(objects, "object")
        _check_labels(parameters, "parameter")

        rows = tuple(tuple(row) for row in self.grid)
        if len(rows) != len(objects):
            raise ShapeMismatch(f"grid has {len(rows)} rows, expected {len(objects)} (one per object)")
        for i, row in enumerate(rows):
            if len(row) != len(parameters):
                raise ShapeMismatch(
                    f"row {objects[i]!r} has {len(row)} cells, expected {len(parameters)}", row=i
                )
            for j, cell in enumerate(row):
                if not isinstance(cell, Interval):
                    raise ShapeMismatch(
                        f"cell ({objects[i]}, {parameters[j]}) is not an Interval: {cell!r}", row=i, col=j
                    )
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "parameters", parameters)
        object.__setattr__(self, "grid", rows)

    @property
    def n(self) -> int:
        return len(self.objects)

    @property
    def m(self) -> int:
        return len(self.parameters)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n, self.m

    def index_of(self, label: str) -> int:
        try:
            return self.objects.index(label)
        except ValueError:
            raise UnknownLabel(f"no object labelled {label!r}") from None

    def cell(self, obj: str, param: str) -> Interval:
        if param not in self.parameters:
            raise UnknownLabel(f"no parameter labelled {param!r}")
        return self.grid[self.index_of(obj)][self.parameters.index(param)]


def build_ivfss(objects: Sequence[str], parameters: Sequence[str], grid) -> Ivfss:
    """Validate and assemble an :class:`Ivfss`.

    Cells may be :class:`Interval` instances or ``(lo, hi)`` pairs. Errors
    raised for a single cell carry its zero-based ``row``/``col``.
    """
    objects = tuple(objects)
    parameters = tuple(parameters)
    if not objects:
        raise EmptyUniverse("the universe has no objects")
    if not parameters:
        raise EmptyParameters("the parameter set is empty")
    grid = list(grid)
    if len(grid) != len(objects):
        raise ShapeMismatch(f"grid has {len(grid)} rows, expected {len(objects)} (one per object)")

    rows = []
    for i, row in enumerate(grid):
        row = list(row)
        if len(row) != len(parameters):
            raise ShapeMismatch(f"row {i + 1} has {len(row)} cells, expected {len(parameters)}", row=i)
        cells = []
        for j, cell in enumerate(row):
            if isinstance(cell, Interval):
                cells.append(cell)
                continue
            try:
                lo, hi = cell
            except (TypeError, ValueError):
                raise ShapeMismatch(
                    f"cell at row {i + 1}, column {j + 1} is not a [lo, hi] pair: {cell!r}", row=i, col=j
                ) from None
            try:
                cells.append(Interval(lo, hi))
            except (OutOfRange, Inverted) as exc:
                raise exc.at(i, j, f"cell ({objects[i]}, {parameters[j]}) at row {i + 1}, column {j + 1}") from None
        rows.append(tuple(cells))
    return Ivfss(objects, parameters, tuple(rows))


def min_matrix(s: Ivfss) -> ValueMatrix:
    """Matrix of lower membership degrees."""
    return ValueMatrix(Bound.MIN, tuple(tuple(c.lo for c in row) for row in s.grid))


def max_matrix(s: Ivfss) -> ValueMatrix:
    """Matrix of upper membership degrees."""
    return ValueMatrix(Bound.MAX, tuple(tuple(c.hi for c in row) for row in s.grid))


def remove_object(s: Ivfss, label: str) -> Ivfss:
    """Drop one object's row, keeping every other row in its original order."""
    i = s.index_of(label)
    if s.n < 2:
        raise UniverseTooSmall(f"cannot remove {label!r}: it is the only object")
    return Ivfss(s.objects[:i] + s.objects[i + 1:], s.parameters, s.grid[:i] + s.grid[i + 1:])
