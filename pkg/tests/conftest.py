import functools

import pytest

from symmetroids.registry import get_example


@functools.lru_cache(maxsize=None)
def example(eid):
    return get_example(eid)


@pytest.fixture
def pencil():
    """Look up a registered example pencil by id."""
    return lambda eid: example(eid).pencil


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, after the regular test output."""
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], outcome.upper()[:4], props.get("elapsed", 0.0), props["title"]))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, elapsed, title in sorted(lines):
        terminalreporter.write_line(f"criterion {number}: {status} ({elapsed:.2f}s) {title}")
