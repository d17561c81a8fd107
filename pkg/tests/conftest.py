from pathlib import Path

import pytest

from ntiers.data import laboratory_pim_text
from ntiers.transform import transform
from ntiers.xmi import parse_pim

DATA = Path(__file__).parent / "data"

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when not in ("setup", "call"):
        return
    number, title = marker.args
    if rep.failed or (rep.when == "call" and number not in _criteria):
        _criteria[number] = (title, "FAIL" if rep.failed else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def lab_pim():
    return parse_pim(laboratory_pim_text())


@pytest.fixture
def lab_result(lab_pim):
    return transform(lab_pim)


@pytest.fixture
def lab_psm(lab_result):
    return lab_result.psm
