import contextlib
import time

import pytest

_RESULTS: list[str] = []


class Criterion:
    def __init__(self, number, title, seconds):
        self.number = number
        self.title = title
        self.seconds = seconds
        self.details = []

    def note(self, text):
        self.details.append(str(text))


@contextlib.contextmanager
def _criterion(number, title, seconds):
    c = Criterion(number, title, seconds)
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield c
        elapsed = time.perf_counter() - start
        c.note(f"{elapsed:.1f}s")
        assert elapsed < seconds, f"took {elapsed:.1f}s, limit {seconds}s"
        status = "PASS"
    except AssertionError as exc:
        c.note(str(exc).splitlines()[0] if str(exc) else "assertion failed")
        raise
    finally:
        line = f"criterion {number:2d} {title}: {status} ({'; '.join(c.details)})"
        _RESULTS.append(line)
        print(line)


@pytest.fixture
def criterion():
    return _criterion


def pytest_terminal_summary(terminalreporter):
    if _RESULTS:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(_RESULTS):
            terminalreporter.write_line(line)
