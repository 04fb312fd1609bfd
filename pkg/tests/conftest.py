from __future__ import annotations

from functools import lru_cache

import pytest

from zmspectrum.harness import enumerate_triples
from zmspectrum.zmgroup import validate


@lru_cache(maxsize=None)
def admissible(max_order: int):
    """Validated params for every admissible triple with m*n <= max_order."""
    return tuple(validate(m, n, r) for m, n, r in enumerate_triples(max_order))


@pytest.fixture
def dic3():
    return validate(3, 4, 2)


@pytest.fixture
def zm564():
    return validate(5, 6, 4)


# one summary line per acceptance criterion
_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _criteria[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in sorted(_criteria.items()):
        terminalreporter.write_line(f"{verdict}  {name}")
