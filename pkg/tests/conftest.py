import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# one PASS/FAIL line per acceptance criterion, built from the real test outcomes
_CRITERIA: dict[int, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        ok = report.passed and not hasattr(report, "wasxfail")
        note = getattr(report, "wasxfail", "") or ("" if ok else report.outcome)
        _CRITERIA.setdefault(mark.args[0], []).append((item.name, ok, note))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        results = _CRITERIA[number]
        failed = [(name, note) for name, ok, note in results if not ok]
        line = f"criterion {number:2d}: {'PASS' if not failed else 'FAIL'}"
        if failed:
            line += "  (" + "; ".join(f"{name}: {note}" for name, note in failed) + ")"
        terminalreporter.write_line(line)
