#!/usr/bin/env python3
"""Run every verification check at its default grid and print summary lines.

Exits 1 if any check reports a violation.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mstd.search import explore_min_additions, explore_two_ap_unions
from mstd.setcore import APSpec
from mstd.verify import (
    GrowthSequence,
    Theorem3Params,
    verify_ap_plus_two,
    verify_growth_criterion,
    verify_insertion_deficit,
    verify_observation6,
    verify_proposition2,
    verify_size5_witnesses,
    verify_small_cardinality,
    verify_symmetric_balanced,
)

FIB13 = (0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233)
GEO10 = tuple(5**k * 3 ** (9 - k) for k in range(10))


def main():
    reports = [
        verify_small_cardinality(5, 30),
        verify_small_cardinality(7, 20),
        verify_ap_plus_two(8),
        verify_insertion_deficit(8),
        verify_proposition2(20),
        verify_observation6(100_000),
        verify_symmetric_balanced(20),
        verify_growth_criterion(
            GrowthSequence(FIB13, 3),
            Theorem3Params(r=3, n=2, ell=5, m=1, window=(-50, 100)),
        ),
        verify_growth_criterion(
            GrowthSequence(GEO10, 2),
            Theorem3Params(r=2, n=2, ell=4, m=1, window=(-50, 100)),
        ),
        verify_size5_witnesses(),
        explore_two_ap_unions(6, 5, 40),
        explore_min_additions(APSpec(3, 4, 3), 5, (0, 14)),
    ]
    failed = False
    for report in reports:
        print(report.summary_line())
        for note in report.notes:
            print(f"    note: {note}")
        failed = failed or not report.passed
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
