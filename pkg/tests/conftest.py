import random
import re
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from arithwidth import make_polytope  # noqa: E402

F = Fraction


@pytest.fixture
def triangle():
    return make_polytope([(0, 0), (4, 1), (4, 2)])


@pytest.fixture
def sliver():
    return make_polytope([(0, 0), (1, 0), (F(3, 5), F(14, 5))])


@pytest.fixture
def quad():
    return make_polytope([(0, 0), (F(1, 3), 0), (0, F(1, 2)), (F(1, 2), F(1, 3))])


def random_rational(rng, bound=4, max_den=4):
    q = rng.randint(1, max_den)
    return F(rng.randint(-bound * q, bound * q), q)


def random_polytope(rng, d, max_vertices=6, bound=4, max_den=4):
    k = rng.randint(1, max_vertices)
    return make_polytope([tuple(random_rational(rng, bound, max_den) for _ in range(d))
                          for _ in range(k)])


def random_direction(rng, d, bound=5):
    while True:
        c = tuple(rng.randint(-bound, bound) for _ in range(d))
        if any(c):
            return c


@pytest.fixture
def rng():
    return random.Random(20261015)


# -- one line per acceptance criterion in the terminal summary ---------------

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    m = re.search(r"test_criterion_(\d+)_(\w+)", report.nodeid)
    if m:
        num = int(m.group(1))
        # parametrized criteria fail if any instance fails
        if _ACCEPTANCE.get(num, (None, "passed"))[1] == "passed":
            _ACCEPTANCE[num] = (m.group(2), report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        name, outcome = _ACCEPTANCE[num]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d} {verdict}  {name}")
