import pytest

from circsqf import _accel, _pykernels

BACKENDS = {"python": _pykernels}
if _accel.BACKEND == "cython":
    BACKENDS["cython"] = _accel.kernels


@pytest.fixture(scope="module", params=sorted(BACKENDS))
def kernels(request):
    return BACKENDS[request.param]


def naive_square_positions(w):
    """Every (start, period) of a square factor, 0-based, by direct comparison."""
    out = []
    for i in range(len(w)):
        for p in range(1, (len(w) - i) // 2 + 1):
            if all(w[i + k] == w[i + p + k] for k in range(p)):
                out.append((i, p))
    return out


# One line per acceptance criterion, filled in by test_acceptance.py and
# printed at the end of the run whether or not output capture is on.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split(".")[0].split()[-1])):
            terminalreporter.write_line(line)
