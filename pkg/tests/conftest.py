"""Collects per-criterion outcomes from the acceptance tests and prints them."""
from collections import OrderedDict

import pytest

_outcomes: "OrderedDict[int, list]" = OrderedDict()


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _outcomes.setdefault(m.args[0], [])
    for k in sorted(_outcomes):
        _outcomes.move_to_end(k)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes.setdefault(m.args[0], []).append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k, results in _outcomes.items():
        status = "PASS" if results and all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {k:2d}: {status} ({sum(results)}/{len(results)} checks)")
