import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_A" not in report.nodeid:
        return
    name = report.nodeid.split("::")[1]
    criterion = name.split("_")[1]
    if report.when == "call" or report.failed:
        prev = _ACCEPTANCE.get(criterion, "PASS")
        _ACCEPTANCE[criterion] = "FAIL" if report.failed or prev == "FAIL" else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{criterion} {_ACCEPTANCE[criterion]}")
