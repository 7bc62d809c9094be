"""Emit one PASS/FAIL line per acceptance criterion after the run."""

_ACCEPTANCE_FILE = "test_acceptance.py"
_results: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if _ACCEPTANCE_FILE not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1].removeprefix("test_").replace("_", "-")
    if report.when == "call":
        _results[name] = report.outcome
    elif report.when == "setup" and report.outcome != "passed":
        _results[name] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    for name, outcome in _results.items():
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[acceptance] {name}: {status}")
