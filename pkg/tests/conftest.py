import pytest

_CRITERIA = {}


def _name(item):
    marker = item.get_closest_marker("criterion")
    return marker.args[0] if marker else None


@pytest.fixture
def criterion(request):
    """Collect detail strings for an acceptance criterion's summary line."""
    details = []
    _CRITERIA[_name(request.node)] = ["FAIL", details]
    return details.append


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion label")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    name = _name(item)
    if name in _CRITERIA and report.when == "call":
        _CRITERIA[name][0] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda s: int(s.split(".")[0])):
        status, details = _CRITERIA[name]
        line = f"[{status}] {name}"
        if details:
            line += "  (" + "; ".join(details) + ")"
        terminalreporter.write_line(line)
