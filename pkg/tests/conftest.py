"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""

import pytest

_OUTCOMES = {}
_SETUP = pytest.StashKey[float]()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or not marker.args:
        return
    name = marker.args[0]
    if report.when == "setup":
        # shared suite fixtures do their work during setup
        item.stash[_SETUP] = report.duration
    if report.when == "call" or (report.when == "setup" and not report.passed):
        detail = ""
        if report.failed:
            detail = str(report.longrepr.reprcrash.message) if hasattr(report.longrepr, "reprcrash") else "error"
        _OUTCOMES[name] = (report.passed, report.duration + item.stash.get(_SETUP, 0.0), detail.splitlines()[0] if detail else "")


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for name, (passed, seconds, detail) in sorted(_OUTCOMES.items()):
        line = f"{'PASS' if passed else 'FAIL'}  {name}  ({seconds:.1f}s)"
        if detail:
            line += f"  -- {detail}"
        terminalreporter.write_line(line)
