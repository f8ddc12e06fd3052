"""Shared test configuration.

Tests marked ``acceptance(num, name)`` are collected into a final
report: one line per criterion printed after the run.
"""

import pytest

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(num, name): an acceptance criterion; reported one "
        "line per criterion at the end of the run")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    num, name = marker.args
    if rep.when == "call":
        _CRITERIA[num] = (name, rep.passed)
    elif rep.failed:
        _CRITERIA[num] = (name, False)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_CRITERIA):
        name, ok = _CRITERIA[num]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {num} ({name}): {status}")
