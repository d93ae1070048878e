import pytest

_criteria: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    marker = report.__dict__.get("criterion")
    if marker is None:
        return
    number, label = marker
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[number] = (label, "PASS" if report.passed else "FAIL")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        outcome.get_result().criterion = tuple(mark.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        label, verdict = _criteria[number]
        terminalreporter.write_line(f"{verdict}  criterion {number:2d}  {label}")
