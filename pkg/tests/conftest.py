import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Record one PASS/FAIL line per acceptance criterion, printed after the run."""

    def _report(label, ok, detail=""):
        tag = "PASS" if ok else "FAIL"
        _ACCEPTANCE_LINES.append(f"{tag}  {label}  {detail}".rstrip())
        print(_ACCEPTANCE_LINES[-1])
        return ok

    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
