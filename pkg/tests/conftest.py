import pytest

ACCEPTANCE_LINES: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for one acceptance criterion."""

    recorded = []

    def record(number: int, title: str) -> None:
        recorded.append((number, title))

    yield record
    rep = getattr(request.node, "rep_call", None)
    for number, title in recorded:
        ACCEPTANCE_LINES[number] = (rep is not None and rep.passed, title)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        passed, title = ACCEPTANCE_LINES[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title}")
