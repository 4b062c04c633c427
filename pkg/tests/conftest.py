import pytest

from qloop.repcore.module import tensor
from qloop.sl2eval import eval_module


@pytest.fixture(params=[2, 3], ids=["q=2", "q=3"])
def q(request):
    return request.param


@pytest.fixture
def adjacent_pair():
    """eval(1,1) (x) eval(1,4) at q = 2: two adjacent strings, reducible."""
    return tensor(eval_module(1, 1, 2), eval_module(1, 4, 2))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(LINES, key=lambda s: (int(s.split()[2].split("-")[0]), "strict" in s, s)):
            terminalreporter.write_line(line)
