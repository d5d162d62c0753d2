import pytest

_criteria: dict[int, dict] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if call.when != "call" and not (call.when == "setup" and call.excinfo is not None):
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "ok": True, "tests": 0})
    entry["tests"] += 1
    if call.excinfo is not None:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(
            f"[{status}] criterion {number:>2}: {entry['title']} ({entry['tests']} {'check' if entry['tests'] == 1 else 'checks'})"
        )


@pytest.fixture(autouse=True)
def _fresh_memo():
    # recurrence memo is process-wide; keep tests independent of ordering
    from hookverify.engine import clear_memo

    clear_memo()
    yield
