from __future__ import annotations

import sys
from pathlib import Path

import pytest

from hopfcross.exactfield import Field
from hopfcross.fixtures import data_path

TESTS = Path(__file__).resolve().parent
sys.path.insert(0, str(TESTS))

# criterion number -> (passed, detail), filled in by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def acceptance():
    """record(n, ok, detail) stores one criterion result for the summary."""

    def record(n: int, ok: bool, detail: str) -> bool:
        ACCEPTANCE[n] = (ok, detail)
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok

    return record


@pytest.fixture(scope="session")
def F3():
    return Field(3)


@pytest.fixture(scope="session")
def bundled():
    return data_path


@pytest.fixture(scope="session")
def golden():
    return lambda name: TESTS / "data" / name


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
