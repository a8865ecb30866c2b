import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_results: dict[int, tuple[str, bool]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            item.user_properties.append(("acceptance", mark.args))


def pytest_runtest_logreport(report):
    args = dict(report.user_properties).get("acceptance")
    if args is None:
        return
    num, title = args
    if report.when == "call" or report.failed:
        prev = _results.get(num, (title, True))[1]
        _results[num] = (title, prev and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        title, ok = _results[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {num}: {title}")
