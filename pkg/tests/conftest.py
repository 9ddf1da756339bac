import numpy as np
import pytest

from ftpie import _kernels
from ftpie.distributions import FixedProb
from ftpie.model import build_tree


@pytest.fixture(params=sorted(_kernels.BACKENDS))
def backend(request):
    """Run the test once per available kernel backend."""
    with _kernels.use_backend(request.param):
        yield request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def fixed_tree(probs, gates, top):
    """Tree over FixedProb events from a {name: p} dict."""
    return build_tree([(k, FixedProb(v)) for k, v in probs.items()], gates, top)


_ACCEPTANCE = []


@pytest.fixture
def acceptance(request):
    """Call with (criterion, passed, detail); lines are printed in the terminal summary."""
    def record(name, passed, detail=""):
        _ACCEPTANCE.append(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
