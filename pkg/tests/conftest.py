import pytest

from factroid.mulsets import Reg
from factroid.rings import parse_ring

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def gf2xy():
    R = parse_ring("GF(2)[x,y]")
    x, y = R.gens()
    return R, x, y


@pytest.fixture
def gf2x():
    R = parse_ring("GF(2)[x]")
    return R, R.gens()[0]


@pytest.fixture
def quartic(gf2xy):
    R, x, y = gf2xy
    return R, x, y, (x + y**2) * (y + x**2), Reg(R)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
