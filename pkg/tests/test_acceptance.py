"""Acceptance criteria 1-9, one pass/fail line per criterion."""

import subprocess
import sys
import time

import pytest

from mlradii import verification as v

NAMES = {
    1: "oracle radii at (2,2,1)",
    2: "bound sandwiches at (2,2,1)",
    3: "W_i sweep grid",
    4: "Rayleigh-sum identities",
    5: "Euler-Rayleigh sharpening",
    6: "Weierstrass product reconstruction",
    7: "W_i decision",
    8: "H/G substitution law",
    9: "verify runs under 2 minutes and exits 0",
}
LINES = []  # printed in the terminal summary by conftest.py


@pytest.fixture(scope="module")
def report():
    rows = v.run_all()
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "mlradii", "verify"], capture_output=True,
                          text=True, timeout=600)
    elapsed = time.perf_counter() - t0
    cli_ok = proc.returncode == 0 and elapsed < v.TIME_LIMIT_VERIFY
    summary = v.summarize(rows)
    summary[9] = summary[9] and cli_ok
    LINES.clear()
    for k in sorted(NAMES):
        LINES.append(f"criterion {k}: {'PASS' if summary[k] else 'FAIL'}  {NAMES[k]}")
    LINES.append(f"verify subprocess: exit {proc.returncode}, {elapsed:.2f} s")
    print("\n" + "\n".join(LINES))
    return rows, summary


@pytest.mark.parametrize("criterion", sorted(NAMES))
def test_criterion(report, criterion):
    rows, summary = report
    failed = [r for r in rows if r.criterion == criterion and not r.passed]
    assert summary[criterion], v.to_markdown(failed) if failed else "verify subprocess failed or too slow"
