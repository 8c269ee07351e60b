import pytest

_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    report = (yield).get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    failed = report.failed or (report.when == "call" and report.skipped)
    if report.when == "call" or failed:
        _outcomes[n] = _outcomes.get(n, True) and not failed


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if _outcomes[n] else 'FAIL'}")
