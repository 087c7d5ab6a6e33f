"""Acceptance criteria 1-8 at full scale: exhaustive connected ribbon graphs
with up to 6 edges, 1000 random graphs with up to 8 edges, seed 7.

The suite runs once per session; each criterion is its own test and a
PASS/FAIL line per criterion is printed in the terminal summary.
"""

import os

import pytest

from deltaribbon.suites import CRITERIA, run_suite

MAX_EDGES = 6
SEED = 7
RESULTS: dict[int, str] = {}


@pytest.fixture(scope="session")
def report():
    jobs = int(os.environ.get("DELTARIBBON_JOBS", "0")) or None
    return run_suite("all", max_edges=MAX_EDGES, seed=SEED, jobs=jobs)


@pytest.mark.parametrize("criterion", sorted(CRITERIA))
def test_criterion(report, criterion):
    checks = [c for c in report.checks if c.criterion == criterion]
    assert checks, f"no checks registered for criterion {criterion}"
    passed = report.criterion_passed(criterion)
    counts = ", ".join(f"{c.name}: {c.count}" for c in checks)
    RESULTS[criterion] = f"criterion {criterion} ({CRITERIA[criterion]}): {'PASS' if passed else 'FAIL'} [{counts}]"
    print(RESULTS[criterion])
    failures = [f"{c.name}\n{c.counterexample}" for c in checks if not c.passed]
    assert passed, "\n".join(failures)
