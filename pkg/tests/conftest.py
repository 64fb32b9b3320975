import pytest

from ctxlab import kernels
from ctxlab.catalog import catalog

CATALOG = ["pentagon", "yu-oh", "g32", "triangle-demo"]


@pytest.fixture(params=CATALOG)
def bundle(request):
    return catalog(request.param)


@pytest.fixture
def pentagon():
    return catalog("pentagon")


@pytest.fixture
def yu_oh():
    return catalog("yu-oh")


@pytest.fixture
def g32():
    return catalog("g32")


@pytest.fixture
def triangle():
    return catalog("triangle-demo")


@pytest.fixture(params=["compiled", "python"])
def backend(request, monkeypatch):
    """Run the library through one kernel backend."""
    if request.param == "compiled" and kernels._compiled is None:
        pytest.skip("compiled kernels not built")
    if request.param == "python":
        monkeypatch.setattr(kernels, "_compiled", None)
    return request.param


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


_CRITERIA = {}
_CRITERION_MARKS = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    mark = _CRITERION_MARKS.get(report.nodeid)
    if mark is not None:
        _CRITERIA[mark] = report.passed


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _CRITERION_MARKS[item.nodeid] = m.args


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(_CRITERIA.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}")
