"""Acceptance criteria 1-10 at full bounds, each within its time budget.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion lines.
"""

import pytest

from eulertwist.suite import CRITERIA, run_criterion


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"criterion_{c.number:02d}")
def test_criterion(criterion, capsys):
    rep, dt = run_criterion(criterion)
    ok = rep.passed and dt < criterion.budget_s
    with capsys.disabled():
        print(f"\ncriterion {criterion.number:02d} {criterion.title}: "
              f"{'PASS' if ok else 'FAIL'} ({dt:.2f} s, budget {criterion.budget_s} s)")
    assert rep.passed, [f.name for f in rep.failures()][:10]
    assert dt < criterion.budget_s
