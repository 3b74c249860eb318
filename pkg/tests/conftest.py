import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--long-running",
        action="store_true",
        default=False,
        help="run computations beyond the default generator cap",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long-running"):
        return
    skip = pytest.mark.skip(reason="needs --long-running")
    for item in items:
        if "long_running" in item.keywords:
            item.add_marker(skip)


# acceptance criteria: tests tagged @pytest.mark.criterion(n, "title") are
# grouped and reported as one PASS/FAIL line per criterion

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call" and not (call.when == "setup" and call.excinfo):
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, {"title": title, "passed": 0, "failed": 0, "skipped": 0})
    if call.excinfo is None:
        entry["passed"] += 1
    elif call.excinfo.errisinstance(pytest.skip.Exception):
        entry["skipped"] += 1
    else:
        entry["failed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        status = "FAIL" if e["failed"] else "PASS" if e["passed"] else "SKIP"
        note = f"{e['passed']} passed"
        if e["failed"]:
            note += f", {e['failed']} failed"
        if e["skipped"]:
            note += f", {e['skipped']} skipped"
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {e['title']} ({note})")
