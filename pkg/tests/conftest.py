"""Shared test configuration.

The acceptance suite in test_acceptance.py is the contract; the hook
below prints one PASS/FAIL line per criterion after the normal pytest
summary so the verdict is readable without scrolling.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much],
)
settings.load_profile("suite")

_ACCEPTANCE_PREFIX = "test_acceptance.py::"


def _criterion_label(nodeid: str) -> str:
    name = nodeid.split("::", 1)[1]
    name = name.split("[", 1)[0]
    return name.removeprefix("test_").replace("_", " ")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if _ACCEPTANCE_PREFIX not in nodeid:
                continue
            verdict = "PASS" if status == "passed" else "FAIL"
            lines.append((nodeid, f"{verdict}  {_criterion_label(nodeid)}"))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(set(lines)):
        terminalreporter.write_line(line)
