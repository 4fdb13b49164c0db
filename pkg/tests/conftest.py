import re

_AC = re.compile(r"test_acceptance\.py::test_ac(\d+)_(\w+)")
_results: dict[tuple[int, str], bool] = {}


def pytest_runtest_logreport(report):
    m = _AC.search(report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.failed:
        _results[key] = _results.get(key, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), ok in sorted(_results.items()):
        terminalreporter.write_line(f"AC{num:<2} {'PASS' if ok else 'FAIL'}  {name.replace('_', ' ')}")
