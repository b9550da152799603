#!/usr/bin/env python3
"""
Verify Sweep Script (alternative to `coxeter2d verify --all-pairs`)

Checks every ordered pair (λ, μ) of decompositions of n+1 = 2, 3, 4 and
prints one line per pair. Takes well under a minute with the default limits.

Usage:
    python verify_sweep.py
"""
import sys
import os

# Add the project directory to the path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from coxeter2d.core.exceptions import Coxeter2DError
from coxeter2d.core.logging import configure_logging
from coxeter2d.parabolic.services import TheoremVerifier

TOTALS = (2, 3, 4)


def verify_sweep():
    """Run the sweep for every total; True when every pair passes."""
    configure_logging()
    verifier = TheoremVerifier()
    failures = 0
    try:
        for total in TOTALS:
            print(f"\nn+1 = {total}")
            for report in verifier.sweep(total):
                lam = ",".join(map(str, report.lambda_))
                mu = ",".join(map(str, report.mu))
                mark = "✅" if report.passed else "❌"
                print(f"  {mark} lambda=({lam}) mu=({mu}) |P| = {report.orders.recursive}")
                if not report.passed:
                    failures += 1
                    print(f"     {report.verdict}: {report.reason}")
    except Coxeter2DError as e:
        print(f"❌ Sweep aborted: {e.detail}")
        return False

    if failures:
        print(f"\n❌ {failures} pair(s) did not pass")
        return False
    print("\n✅ Every pair passed: presentation, matrix image and recursion agree")
    return True


if __name__ == "__main__":
    print("=" * 60)
    print("Parabolic Presentation Sweep")
    print("=" * 60)
    success = verify_sweep()
    sys.exit(0 if success else 1)
