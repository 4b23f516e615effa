import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gcdcomplex.divisor import IntegerSet  # noqa: E402

BOWTIE = (22, 33, 65, 91, 210)
# 6-vertex projective plane with vertices relabelled by the primes 2..13;
# X lists the product of each triangle's primes
RP2 = (30, 70, 78, 154, 165, 231, 273, 286, 455, 715)


@pytest.fixture
def bowtie():
    return IntegerSet.of(BOWTIE)


@pytest.fixture
def rp2():
    return IntegerSet.of(RP2)


_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        prev = _ACCEPTANCE.get(key, (True, marker.args[1]))
        _ACCEPTANCE[key] = (prev[0] and rep.passed, marker.args[1])


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE):
        ok, title = _ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {title}")
