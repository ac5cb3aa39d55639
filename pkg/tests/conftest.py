import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from dunkl2d import make_params

settings.register_profile(
    "repo",
    max_examples=40,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture
def ref_params():
    """The mu1 = 0.3, mu2 = 0.5, gamma = 0.5 point used throughout the worked examples."""
    return make_params(0.3, 0.5, 0.5)


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


ACCEPTANCE_LINES: list = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
