"""One test per acceptance criterion; each prints a PASS/FAIL line.

Every criterion is an exact match (no numeric tolerance). Failing sub-checks
are listed under the FAIL line.
"""
import pytest

from synmon.reproduce import CRITERIA, run_criterion

TOLERANCE = "exact"


@pytest.mark.parametrize("cid", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(cid, capsys):
    result = run_criterion(cid)
    with capsys.disabled():
        print(f"\n{'PASS' if result.passed else 'FAIL'} criterion {cid}: {result.title} [{TOLERANCE}]")
        for check in result.checks:
            if not check.passed:
                print(f"    failed check: {check.label}")
    assert result.passed, "; ".join(c.label for c in result.checks if not c.passed)
