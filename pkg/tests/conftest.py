from pathlib import Path

import pytest

GOLDEN_DIR = Path(__file__).parent / "golden"

_criteria = []


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(number, name, ok, detail)``."""

    def record(number, name, ok, detail=""):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  [{detail}]"
        _criteria.append((number, line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_criteria):
        terminalreporter.write_line(line)
