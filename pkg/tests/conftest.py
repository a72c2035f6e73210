import numpy as np
import pytest

from qstar.linalg import density_from_bloch, random_bloch_vectors


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def random_states(rng):
    def draw(n):
        return [density_from_bloch(*v) for v in random_bloch_vectors(rng, n)]

    return draw


def random_angles(rng, n):
    return rng.uniform(0, np.pi, n), rng.uniform(0, 2 * np.pi, n)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
