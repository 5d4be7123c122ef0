import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def expm_hermitian(h, t=1.0):
    """``exp(i t H)`` for Hermitian ``H`` via its eigendecomposition."""
    w, v = np.linalg.eigh(h)
    return v @ np.diag(np.exp(1j * t * w)) @ v.conj().T


def chamber_points(rng, count):
    """Uniform samples ``(c1, c2, c3)`` with ``pi/4 >= c1 >= c2 >= |c3|``."""
    out = []
    while len(out) < count:
        c1, c2 = rng.uniform(0, np.pi / 4, 2)
        c3 = rng.uniform(-np.pi / 4, np.pi / 4)
        if c1 >= c2 >= abs(c3):
            out.append((c1, c2, c3))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
