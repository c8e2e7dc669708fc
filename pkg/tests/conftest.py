import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from smallcovers.covers import Coloring  # noqa: E402
from smallcovers.polytope import builtin  # noqa: E402

# facet colors use e1 = 1, e2 = 2, e3 = 4
SQUARE_TORUS = (1, 2, 1, 2)
SQUARE_KLEIN = (1, 2, 3, 2)
CUBE_T3 = (4, 4, 1, 2, 1, 2)  # opposite pairs (0,1), (2,4), (3,5)


@pytest.fixture(scope="session")
def cube():
    return builtin("cube")


@pytest.fixture(scope="session")
def dodecahedron():
    return builtin("dodecahedron")


@pytest.fixture(scope="session")
def square():
    return builtin("square")


@pytest.fixture
def cube_t3():
    return Coloring(3, CUBE_T3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    RESULTS = getattr(mod, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: int(k.split()[0])):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")
