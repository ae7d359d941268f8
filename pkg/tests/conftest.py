"""Shared pytest wiring.

Tests marked ``acceptance(number, name)`` are the package's acceptance
gate; after the run a one-line PASS/FAIL verdict per criterion is
printed so the gate can be read off the terminal without parsing the
pytest output.
"""

import pytest

_RESULTS: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(number, name): one acceptance criterion of the package",
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    number, name = mark.args
    if report.when == "call":
        _RESULTS[number] = (name, "PASS" if report.passed else "FAIL")
    elif report.when == "setup" and not report.passed:
        _RESULTS[number] = (name, "FAIL")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(_RESULTS):
        name, verdict = _RESULTS[number]
        terminalreporter.write_line(
            "[acceptance] criterion %02d %s: %s" % (number, name, verdict)
        )
