import pytest

from qtoroidal.fiber import EvalPoints
from qtoroidal.torus_form import QMatrix


def t1_torus():
    # n = 2, q_12 = -1
    return QMatrix.from_pairs(2, 2, {(0, 1): 1})


def mixed_torus():
    # n = 3 with q_12 = -1, q_13 = zeta_3, q_23 = zeta_6
    return QMatrix.from_pairs(3, 6, {(0, 1): 3, (0, 2): 2, (1, 2): 1})


def zeta3_torus():
    return QMatrix.from_pairs(2, 3, {(0, 1): 1})


@pytest.fixture
def t1():
    return t1_torus()


@pytest.fixture
def mixed():
    return mixed_torus()


@pytest.fixture
def zeta3():
    return zeta3_torus()


@pytest.fixture
def t1_points(t1):
    return EvalPoints.ones(t1)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
