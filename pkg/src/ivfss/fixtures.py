"""Embedded datasets: houses, apartments and scenic spots.

Grids are typed in as ``lo hi`` pairs per cell. Baseline rankings are the
published orders of three earlier methods (score-based, added-objects and
contrast-table means), kept only for comparison.
"""

from __future__ import annotations

from .core import build_ivfss
from .errors import UnknownFixture
from .io import Dataset

_HOUSES = """
0.7 0.9  0.6 0.7  0.3 0.5  0.5 0.8
0.6 0.8  0.8 1.0  0.8 0.9  0.9 1.0
0.5 0.6  0.2 0.4  0.5 0.7  0.7 0.9
0.6 0.8  0.0 0.1  0.7 1.0  0.6 0.8
0.8 0.9  0.1 0.3  0.9 1.0  0.2 0.5
0.8 1.0  0.7 0.8  0.2 0.5  0.7 1.0
"""

_APARTMENTS = """
0.3 0.5  0.6 0.7  0.2 0.4  0.4 0.5
0.3 0.4  0.4 0.5  0.6 0.7  0.1 0.3
0.5 0.6  1.0 1.0  0.2 0.3  0.2 0.4
0.5 0.7  0.0 0.1  0.7 0.8  0.6 0.7
0.3 0.6  0.3 0.4  0.4 0.7  0.2 0.3
"""

_SCENIC = """
0.13 0.52  0.60 0.98  0.27 0.95  0.50 1.00
0.35 0.71  0.06 0.49  0.62 0.89  0.25 1.00
0.23 0.52  0.36 0.64  0.25 0.81  0.50 0.75
0.39 0.74  0.06 0.37  0.46 0.74  0.25 0.75
0.19 0.55  0.50 1.00  0.04 0.76  0.50 0.75
0.45 0.81  0.06 0.20  0.73 0.85  0.50 1.00
0.32 0.71  0.00 0.51  0.57 0.73  0.50 0.75
0.39 0.77  0.01 0.10  0.57 0.96  0.50 0.75
0.03 0.42  0.33 0.89  0.06 0.76  0.00 0.75
0.06 0.42  0.20 0.48  0.37 0.67  0.75 1.00
0.42 0.81  0.01 0.16  0.91 1.00  0.50 0.75
0.65 1.00  0.32 0.44  0.66 0.91  0.00 0.50
0.13 0.58  0.19 0.90  0.04 0.55  0.25 1.00
0.19 0.68  0.15 0.34  0.00 0.36  0.50 0.75
0.00 0.48  0.32 0.91  0.29 0.78  0.50 0.75
0.42 0.87  0.20 0.78  0.46 0.92  0.50 1.00
"""


def _grid(text):
    rows = []
    for line in text.strip().splitlines():
        xs = [float(x) for x in line.split()]
        rows.append([(xs[k], xs[k + 1]) for k in range(0, len(xs), 2)])
    return rows


def _u(*ks):
    return [f"u_{k}" for k in ks]


def _dataset(name, text, baselines=None):
    grid = _grid(text)
    objects = _u(*range(1, len(grid) + 1))
    parameters = [f"x_{k}" for k in range(1, len(grid[0]) + 1)]
    return Dataset(name, build_ivfss(objects, parameters, grid), baselines or {})


def houses() -> Dataset:
    return _dataset("houses", _HOUSES)


def apartments() -> Dataset:
    score_order = _u(3, 4, 1, 2, 5)
    return _dataset(
        "apartments",
        _APARTMENTS,
        {
            "SBDM": score_order,
            "CAODM": score_order,
            "MCTDM": _u(4, 3, 5, 1, 2),
        },
    )


def scenic() -> Dataset:
    score_order = _u(16, 1, 6, 11, 12, 2, 5, 7, 3, 8, 15, 10, 4, 13, 9, 14)
    contrast = _u(16, 6, 1, 12, 11, 2, 8, 7) + [_u(3, 5), _u(15, 10)] + _u(13, 4, 14, 9)
    return _dataset(
        "scenic",
        _SCENIC,
        {
            "SBDM": score_order,
            "CAODM": score_order,
            "MCTDM": contrast,
        },
    )


FIXTURES = {"houses": houses, "apartments": apartments, "scenic": scenic}


def run_fixture(name: str) -> Dataset:
    """Return an embedded dataset by name."""
    try:
        return FIXTURES[name]()
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}") from None
