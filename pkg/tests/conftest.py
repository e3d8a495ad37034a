import pytest

_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria of the package")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.get_closest_marker("acceptance"):
        crit = item.callspec.params["criterion"]
        _acceptance.append((item.callspec.id, report.outcome, crit.__doc__))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for ident, outcome, doc in _acceptance:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{ident} {status}: {doc}")
