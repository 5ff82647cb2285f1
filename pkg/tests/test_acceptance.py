"""Acceptance battery: one test (and one printed pass/fail line) per criterion.

Every check is exact (integer/rational/prime-field equality); the stated
runtime budgets are enforced.
"""

import time

import pytest

from mirahoric.verify import SUITES

CRITERIA = [
    (1, "cosets", "partition oracle on the (n,j,p,r) grid, incl. index(3,1,2,1)=6", 120),
    (2, "levelzero", "level-zero degree = Gaussian binomial, n<=4, q in {2,3,5}", 60),
    (3, "jordan", "n=2 generic chi: dim r+1, zero Jordan [r-1], two simple nonzero", 60),
    (4, "banal", "dim F_n = dim L_n = 1 over banal F_ell at level r=n", 300),
    (5, "kirillov", "tuple joint kernel = span(delta_0), stable under M -> M+1", 120),
    (6, "commute", "U^(i)U^(j) = U^(j)U^(i) exactly, n=3 grid", 60),
    (7, "basechange", "mod-ell reduction of char-0 Hecke matrices is entrywise exact", 60),
    (8, "levelchange", "embedding intertwines; projector idempotent of rank dim(level r)", 60),
    (9, "eigenvector", "all-ones vector has eigenvalue coset_degree for trivial chi", 60),
    (10, "canonical", "greedy canonical form matches brute-force orbit partition", 60),
]


@pytest.mark.parametrize("number,suite,label,budget", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_acceptance_criterion(number, suite, label, budget):
    start = time.monotonic()
    checks = SUITES[suite](seed=12345)
    elapsed = time.monotonic() - start
    failed = [c for c in checks if not c.passed]
    status = "PASS" if not failed and elapsed < budget else "FAIL"
    print(f"ACCEPTANCE {number:2d} [{status}] {suite}: {len(checks) - len(failed)}/{len(checks)} checks, {elapsed:.1f}s — {label}")
    for c in failed:
        print(f"    failed: {c.name} (expected {c.expected}, computed {c.computed})")
    assert not failed
    assert elapsed < budget, f"criterion {number} exceeded its {budget}s budget ({elapsed:.1f}s)"
