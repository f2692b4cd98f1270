import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="also run the n=7 exhaustive checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion" in report.nodeid and (report.when == "call" or report.outcome != "passed"):
        _acceptance[report.nodeid] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    import test_acceptance

    terminalreporter.section("acceptance criteria")
    for number, title, _ in test_acceptance.CRITERIA:
        key = next((k for k in _acceptance if k.endswith(f"[criterion{number}]")), None)
        status = _acceptance.get(key, "NOT RUN")
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}")
