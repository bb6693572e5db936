"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import pytest

_results: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(num, desc): acceptance criterion test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        num, desc = marker.args
        ok, secs, _ = _results.get(num, (True, 0.0, desc))
        _results[num] = (ok and rep.outcome == "passed", secs + rep.duration, desc)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        ok, secs, desc = _results[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {desc}  ({secs:.1f}s)")
