"""One test per acceptance criterion, each printing a PASS/FAIL line.

Run directly (python tests/test_acceptance.py) for the bare table.
"""

import sys

import pytest

from cusplab.acceptance import CRITERIA, run_criterion


def line(n, report):
    verdict = "PASS" if report.passed else "FAIL"
    failed = [c.name for c in report.checks if not c.passed]
    tail = f"  failing: {'; '.join(failed)}" if failed else ""
    return f"[{verdict}] criterion {n:2d} {CRITERIA[n][0]} ({report.wall_time:.2f} s){tail}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    report = run_criterion(n)
    with capsys.disabled():
        print("\n" + line(n, report))
    assert report.passed, report.to_text()


if __name__ == "__main__":
    reports = {n: run_criterion(n) for n in sorted(CRITERIA)}
    for n, r in reports.items():
        print(line(n, r))
    sys.exit(0 if all(r.passed for r in reports.values()) else 1)
