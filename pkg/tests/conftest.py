import re

import pytest

from scpkit import Instance


@pytest.fixture
def example1():
    """Ten elements, five sets: the worked example used throughout the tests.

    Sets are, in order: {a..f}, {a,b,c,g,h}, {d,e,f,i,j}, {g,h,i}, {j} under
    the letter-to-index mapping a=0 .. j=9.
    """
    return Instance.from_memberships(
        10,
        [
            [0, 1, 2, 3, 4, 5],
            [0, 1, 2, 6, 7],
            [3, 4, 5, 8, 9],
            [6, 7, 8],
            [9],
        ],
    )


def _criterion_number(name):
    match = re.search(r"test_criterion_(\d+)", name)
    return int(match.group(1)) if match else None


def pytest_terminal_summary(terminalreporter):
    # One pass/fail line per acceptance criterion, printed after the run.
    verdicts = {}
    for category, label in (
        ("failed", "FAIL"),
        ("error", "FAIL"),
        ("skipped", "SKIP"),
        ("passed", "PASS"),
    ):
        for report in terminalreporter.stats.get(category, ()):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            name = nodeid.split("::", 1)[1]
            verdicts.setdefault(name, label)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(verdicts, key=_criterion_number):
        num = _criterion_number(name)
        label = name.split(f"test_criterion_{num}_", 1)[-1].replace("_", " ")
        terminalreporter.write_line(f"criterion {num} ({label}): {verdicts[name]}")
