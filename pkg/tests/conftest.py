import re

import pytest

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")
_outcomes: dict[int, list] = {}
_titles: dict[int, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = _CRITERION.search(item.nodeid)
    if not m:
        return
    n = int(m.group(1))
    title = (getattr(item.module, "CRITERIA", {}) or {}).get(n)
    if title:
        _titles[n] = title
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes.setdefault(n, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        status = "PASS" if all(_outcomes[n]) else "FAIL"
        checks = len(_outcomes[n])
        terminalreporter.write_line(f"[{status}] criterion {n}: {_titles.get(n, '')} ({checks} checks)")
