import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from ivfss import build_ivfss, run_fixture

sys.path.insert(0, str(Path(__file__).parent))

GOLDEN = Path(__file__).parent / "golden"


@st.composite
def intervals(draw):
    a = draw(st.floats(0.0, 1.0))
    b = draw(st.floats(0.0, 1.0))
    return (min(a, b), max(a, b))


@st.composite
def ivfss_sets(draw, min_n=1, max_n=8, min_m=1, max_m=8):
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(min_m, max_m))
    grid = [[draw(intervals()) for _ in range(m)] for _ in range(n)]
    return build_ivfss([f"u_{i + 1}" for i in range(n)], [f"x_{j + 1}" for j in range(m)], grid)


@pytest.fixture
def houses():
    return run_fixture("houses").ivfss


@pytest.fixture
def apartments():
    return run_fixture("apartments").ivfss


@pytest.fixture
def scenic():
    return run_fixture("scenic").ivfss


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[key])
