import numpy as np
import pytest

import frameorbit as fo

# filled by tests/test_acceptance.py, printed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def complex_gaussian(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_invertible(rng, m):
    return complex_gaussian(rng, m, m)


def random_positive(rng, m):
    A = complex_gaussian(rng, m, m)
    return A @ A.conj().T + 0.1 * np.eye(m)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def e1e1e2():
    return fo.FrameMatrix.from_vectors([[1, 0], [1, 0], [0, 1]])


@pytest.fixture
def basis2():
    return fo.FrameMatrix.from_vectors(np.eye(2))
