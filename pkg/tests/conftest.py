"""Shared test plumbing: the acceptance summary lines."""

_acceptance_lines = []


def record_criterion(number, description, ok):
    line = f"criterion {number:02d}: {'PASS' if ok else 'FAIL'} - {description}"
    _acceptance_lines.append((number, line))
    return ok


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_lines:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for _, line in sorted(_acceptance_lines):
        terminalreporter.write_line(line)
