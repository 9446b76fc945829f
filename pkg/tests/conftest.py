from __future__ import annotations

import time
from contextlib import contextmanager

import pytest

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


@pytest.fixture
def criterion(request):
    """Context manager that records one PASS/FAIL line for an acceptance criterion."""
    lines = request.config.stash[_LINES]

    @contextmanager
    def record(number: int, title: str):
        start = time.perf_counter()
        info: dict = {}
        try:
            yield info
        except BaseException as exc:
            line = f"FAIL criterion {number}: {title} ({time.perf_counter() - start:.2f}s) {type(exc).__name__}: {exc}"
            lines.append(line.splitlines()[0])
            print(lines[-1])
            raise
        extra = f" {info['note']}" if "note" in info else ""
        lines.append(f"PASS criterion {number}: {title} ({time.perf_counter() - start:.2f}s){extra}")
        print(lines[-1])

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
