"""Acceptance criteria 1-8 (blocking) and 9 (stretch), one test per criterion.

Each test runs the checks of the verification battery belonging to its
criterion, prints one summary line, and fails with every failing check's
detail.  Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""

import pytest

from pzero import battery as B

CRITERIA = {
    "1": ("group orders", B.check_orders),
    "2": ("natural action properties", B.check_actions),
    "3": ("curve point counts and automorphisms", B.check_curves),
    "4": ("genus, 2-rank and d_P identity", B.check_genus),
    "5": ("genus spectra", B.check_spectrum),
    "6": ("quotient cross-validation", B.check_quotients),
    "7": ("bound trigger", B.check_bounds),
    "8": ("classification", B.check_classification),
    "9": ("stretch: 2-rank of the one-fixed-point cubic cover", B.check_stretch),
}


def _run_criterion(number):
    title, check = CRITERIA[number]
    results = check(quick=False)
    assert results and all(r.criterion == number for r in results)
    passed = all(r.passed for r in results)
    seconds = sum(r.seconds for r in results if r.name != "total time")
    status = "PASS" if passed else "FAIL"
    print(f"\ncriterion {number} [{status}] {title}: {sum(r.passed for r in results)}/{len(results)} checks, {seconds:.1f}s")
    for r in results:
        print("   ", r.line())
    return passed, [r.line() for r in results if not r.passed]


@pytest.mark.parametrize("number", [str(i) for i in range(1, 9)])
def test_criterion(number):
    passed, failures = _run_criterion(number)
    assert passed, "\n".join(failures)


def test_criterion_9_stretch():
    passed, failures = _run_criterion("9")
    if not passed:
        pytest.xfail("stretch criterion (non-blocking): " + "; ".join(failures))
