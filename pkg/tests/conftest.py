"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import pytest

_titles: dict[int, str] = {}
_outcomes: dict[int, list[str]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _titles[number] = title
            item.user_properties.append(("criterion", number))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes.setdefault(crit, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _titles:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_titles):
        results = _outcomes.get(number, [])
        ok = bool(results) and all(r == "passed" for r in results)
        status = "PASS" if ok else ("NOT RUN" if not results else "FAIL")
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {_titles[number]}")
