"""Shared fixtures and independent brute-force oracles.

The oracles deliberately avoid every production code path: plain double
loops over element lists, and quadruple loops for collision counts.
"""

from __future__ import annotations

import pytest

A1 = (0, 2, 3, 4, 7, 11, 12, 14)
FIB13 = (0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233)
GEO10 = tuple(5**k * 3 ** (9 - k) for k in range(10))


def naive_sumset(xs):
    return sorted({a + b for a in xs for b in xs})


def naive_diffset(xs):
    return sorted({a - b for a in xs for b in xs})


def naive_class(xs):
    ns, nd = len(naive_sumset(xs)), len(naive_diffset(xs))
    return "sum-dominant" if ns > nd else ("balanced" if ns == nd else "difference-dominant")


def naive_equal_diff_pairs(xs):
    """Unordered pairs of distinct (i<j) index pairs with equal differences."""
    pairs = [
        (xs[j] - xs[i], (i, j))
        for i in range(len(xs))
        for j in range(i + 1, len(xs))
    ]
    return sum(
        1
        for a in range(len(pairs))
        for b in range(a + 1, len(pairs))
        if pairs[a][0] == pairs[b][0]
    )


def naive_equal_sum_pairs(xs):
    """Unordered pairs of distinct {i<=j} index multisets with equal sums."""
    pairs = [
        (xs[i] + xs[j], (i, j)) for i in range(len(xs)) for j in range(i, len(xs))
    ]
    return sum(
        1
        for a in range(len(pairs))
        for b in range(a + 1, len(pairs))
        if pairs[a][0] == pairs[b][0]
    )


@pytest.fixture
def a1_set():
    from mstd import IntSet

    return IntSet(A1)
