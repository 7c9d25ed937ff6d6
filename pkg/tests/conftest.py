import re

from hypothesis import HealthCheck, settings

settings.register_profile(
    "sweep",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("sweep")

_CRITERION = re.compile(r"test_criterion_(\d+)")
_criterion_outcomes: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if match and report.when == "call":
        _criterion_outcomes[match.group(1)] = (report.nodeid, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criterion_outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_criterion_outcomes):
        nodeid, outcome = _criterion_outcomes[num]
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"criterion {num}: {outcome.upper()} ({name})")
