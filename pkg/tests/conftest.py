"""Shared test plumbing: acceptance criterion lines surface in the summary."""

ACCEPTANCE_LINES = []


def record_criterion(num: int, ok: bool, desc: str) -> None:
    line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {desc}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.line(line)
