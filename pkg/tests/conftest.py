from fractions import Fraction

import pytest
from hypothesis import strategies as st

from gfpoints.families import FamilyParams, degenerate_case

nonzero_fracs = st.builds(
    Fraction,
    st.integers(-50, 50).filter(bool),
    st.integers(1, 50),
)
params_strategy = st.builds(FamilyParams, nonzero_fracs, nonzero_fracs, nonzero_fracs)


def nondegenerate(family):
    return params_strategy.filter(lambda p: degenerate_case(family, p) is None)


_CRITERIA: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; pass/fail is reported in the terminal summary."""
    def record(number: int, title: str):
        request.node._criterion = (number, title)
    yield record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    tag = getattr(item, "_criterion", None)
    if tag is not None and report.when == "call":
        _CRITERIA[tag[0]] = (report.passed, tag[1])


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        passed, title = _CRITERIA[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number:2d}: {title}")
