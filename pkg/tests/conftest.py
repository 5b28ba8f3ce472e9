import numpy as np
import pytest

_ACCEPTANCE_LINES = []


class AcceptanceRecorder:
    def record(self, number, name, passed, detail=""):
        status = "PASS" if passed else "FAIL"
        _ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {name} -- {detail}")
        return passed


@pytest.fixture(scope="session")
def acceptance():
    return AcceptanceRecorder()


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def crandn(rng, *shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_pd(rng, n, sigma2=0.1):
    q = crandn(rng, n + 2, n)
    return sigma2 * np.eye(n) + q.conj().T @ q
