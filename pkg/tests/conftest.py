import pytest

_RESULTS = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = marker.args[0]
    failed = report.failed
    if report.when == "call" or failed:
        prev = _RESULTS.get(key, (marker.args[1], True))
        _RESULTS[key] = (prev[0], prev[1] and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_RESULTS, key=lambda k: (int(str(k).rstrip("abcdefgh")), str(k))):
        title, ok = _RESULTS[key]
        terminalreporter.write_line(f"criterion {key:>3}: {'PASS' if ok else 'FAIL'}  {title}")
