import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from detmorph.quiver import linear_algebra

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def a2():
    return linear_algebra(2, 5)


@pytest.fixture(scope="session")
def a3():
    return linear_algebra(3, 5)


@pytest.fixture(scope="session")
def a2_f2():
    return linear_algebra(2, 2)


def mat(rows):
    return np.array(rows, dtype=np.int64)


_ACCEPTANCE: list[str] = []


@pytest.fixture
def record_acceptance():
    def record(line: str):
        _ACCEPTANCE.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
