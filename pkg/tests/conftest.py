import math

import pytest

from nn_extremal import kernels
from nn_extremal.geom_core import Configuration, Point, Rect

SQRT3 = math.sqrt(3.0)


def available_backends():
    names = ["python"]
    try:
        kernels.get_backend("compiled")
        names.append("compiled")
    except ImportError:
        pass
    return names


@pytest.fixture(scope="module", params=available_backends())
def backend(request):
    return kernels.get_backend(request.param)


@pytest.fixture
def unit():
    return Rect(1.0, 1.0)


@pytest.fixture
def two_per_quadrant(unit):
    pts = [(0.1, 0.1), (0.2, 0.3), (0.7, 0.1), (0.9, 0.2),
           (0.1, 0.8), (0.3, 0.9), (0.6, 0.6), (0.9, 0.9)]
    return Configuration(unit, tuple(Point(*p) for p in pts))


_CRITERIA = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(num, ok, detail)``."""
    lines = request.config.stash.setdefault(_CRITERIA, [])

    def record(num, ok, detail):
        line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        print(line)
        lines.append((num, line))
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_CRITERIA, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines, key=lambda t: t[0]):
        terminalreporter.write_line(line)
