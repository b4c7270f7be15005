import functools
import math

import numpy as np
import pytest

ACCEPTANCE_LINES = []


def kron_hadamard(n):
    """M^{(x)n} built by Kronecker products; independent of the package's FWHT."""
    m = np.array([[1.0]])
    for _ in range(n):
        m = np.kron(m, np.array([[1.0, 1.0], [1.0, -1.0]]))
    return m


def dense_expand(h):
    h = np.asarray(h, dtype=np.float64)
    n = len(h).bit_length() - 1
    return kron_hadamard(n) @ h / len(h)


def h0_phases(n, sigma):
    """(pi/N) * (-1)**parity(k & sigma), spelled out bit by bit."""
    N = 2**n
    out = []
    for k in range(N):
        parity = sum((k >> b) & 1 and (sigma >> b) & 1 for b in range(n)) % 2
        out.append(math.pi / N * (-1) ** parity)
    return np.array(out)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def record():
    return ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


kron_hadamard = functools.lru_cache(maxsize=None)(kron_hadamard)
