from __future__ import annotations

import pytest

from skewdna.skewpoly import from_text

G_EX1 = from_text("1000,B220,D330,1000")
H_EX1 = from_text("1000,B220,B220,1000")
G_EX2 = from_text("1000,8440,0000,8440,1000")
H_EX2 = from_text("1000,8440,1000")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    def _record(criterion: str, passed: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {criterion}{': ' + detail if detail else ''}")

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
