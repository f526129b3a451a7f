import re

_ACCEPTANCE: dict[int, str] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.failed:
        _ACCEPTANCE[n] = "FAIL"
    elif report.when == "call" and report.passed:
        _ACCEPTANCE.setdefault(n, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    from .test_acceptance import CRITERIA, LIMIT

    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"criterion {n:2d} [{_ACCEPTANCE[n]}] {CRITERIA[n]} (limit {LIMIT[n]}s)")
