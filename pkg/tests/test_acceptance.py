"""Acceptance criteria, one test each, at the default seed.

Every test prints a single PASS/FAIL line.  Run directly
(``python tests/test_acceptance.py``) for the plain listing.
"""

import sys
import time

import pytest

from zrspace.sampling import DEFAULT_SEED
from zrspace.suites import SUITES

CRITERIA = [
    (1, "closure identities on all posets with <= 5 points", "closure-identities"),
    (2, "inverse topology reverses the order, 200 posets", "inverse-duality"),
    (3, "ultrafilter prime recovers its center, n <= 10^4", "ultrafilter-prime"),
    (4, "Cl_cons(Y) = Y + K for infinite Y, Y for finite Y", "constructible-closure"),
    (5, "pullback formula for 200 h per base pair", "pullback-formula"),
    (6, "K-function ring axioms and content formula", "function-ring-axioms"),
    (7, "Kr(Y) = Kr(hat Y) on 200 pairs", "kronecker-hat"),
    (8, "finite-type equality vs ideal witnesses, 50 pairs", "finite-type-equality"),
    (9, "e.a.b. on 500 triples per PID base pair", "eab"),
    (10, "wedge_Y = wedge_hat(Y), hat(Y) proconstructible fixed point", "hat-closure"),
    (11, "vacancy of Z and F_2[x]", "vacancy"),
    (12, "equal Cl_cons gives equal intersection rings", "closure-intersection"),
]
TIME_BUDGET = 60.0
_elapsed = {}


def _line(num, desc, rep, dt):
    status = "PASS" if rep.passed else "FAIL"
    return f"[{status}] criterion {num:2d}: {desc} ({rep.checked} checks, {len(rep.violations)} violations, {dt:.1f}s)"


def _run(name):
    t0 = time.perf_counter()
    rep = SUITES[name](DEFAULT_SEED)
    dt = time.perf_counter() - t0
    _elapsed[name] = dt
    return rep, dt


@pytest.mark.parametrize("num,desc,name", CRITERIA, ids=[c[2] for c in CRITERIA])
def test_criterion(num, desc, name, capsys):
    rep, dt = _run(name)
    with capsys.disabled():
        print("\n" + _line(num, desc, rep, dt), end="")
    assert rep.passed, rep.violations[:5]
    assert rep.checked > 0


def test_total_runtime(capsys):
    missing = [c[2] for c in CRITERIA if c[2] not in _elapsed]
    for name in missing:
        _run(name)
    total = sum(_elapsed.values())
    with capsys.disabled():
        status = "PASS" if total < TIME_BUDGET else "FAIL"
        print(f"\n[{status}] all criteria in {total:.1f}s (budget {TIME_BUDGET:.0f}s)", end="")
    assert total < TIME_BUDGET


if __name__ == "__main__":
    ok, total = True, 0.0
    for num, desc, name in CRITERIA:
        rep, dt = _run(name)
        total += dt
        ok &= rep.passed
        print(_line(num, desc, rep, dt))
    print(f"[{'PASS' if total < TIME_BUDGET else 'FAIL'}] total runtime {total:.1f}s")
    sys.exit(0 if ok and total < TIME_BUDGET else 1)
