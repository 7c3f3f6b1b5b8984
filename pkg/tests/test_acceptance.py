"""The eight acceptance criteria, one test each.

Every test prints a single ``[PASS]``/``[FAIL]`` line (also when run as
``python tests/test_acceptance.py``).
"""

import sys
import time

import pytest

from cellcrystal.verify import run_suite

CRITERIA = [
    (1, "catalog potentials equal minor sums, as Laurent polynomials and tropical forms",
     ["catalog-vs-oracle"], 60),
    (2, "potential, polyhedral and tensor truncations are isomorphic with matching labels",
     ["truncations"], 120),
    (3, "characterization, normality, uniqueness and min-x1 conditions",
     ["ks"], None),
    (4, "braid transitions: involutive, crystal morphisms, route independent, omega/xi well defined",
     ["braid"], None),
    (5, "geometric identities at random positive rational points",
     ["geometric"], None),
    (6, "lowest terms, A-factorization and the tabulated exceptional identities",
     ["lowest-terms"], 60),
    (7, "shift lattice, equivariance, Condition H, witnesses, coverage, connectedness",
     ["connectivity"], 300),
    (8, "potential summands rebuilt from monomial-crystal orbits",
     ["monomial"], None),
]


def evaluate(number):
    _, text, suites, limit = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    results = [run_suite(s) for s in suites]
    seconds = time.perf_counter() - start
    failing = [f"{r.suite}: {n}" for r in results for n in r.failing()]
    in_time = limit is None or seconds < limit
    ok = not failing and in_time
    budget = f", limit {limit}s" if limit else ""
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text} ({seconds:.1f}s{budget})"
    if failing:
        line += f"; failing: {', '.join(failing[:5])}"
    if not in_time:
        line += "; over time"
    return ok, line


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA])
def test_criterion(number, capsys):
    ok, line = evaluate(number)
    with capsys.disabled():
        sys.stdout.write("\n" + line + "\n")
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(c[0]) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
