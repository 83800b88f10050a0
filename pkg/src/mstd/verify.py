"""Grid verifiers: every claim the toolkit rests on, checked over finite grids.

Each verifier enumerates an explicit search space, asserts the claimed
property case by case, and returns a VerificationReport whose violations
list carries counterexample witnesses (re-profiled before emission).  Grids
and seeds are echoed so any report can be reproduced exactly.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .reports import DEFAULT_SEED, VerificationReport
from .search import SearchConfig, scan_sum_dominant
from .setcore import (
    IntSet,
    RationalSet,
    SetClass,
    classify,
    scale_to_integers,
    sum_diff_sizes,
)
from .structure import insertion_delta

RANDOM_SET_MAX_SIZE = 12
RANDOM_SET_WINDOW = (0, 64)


def _I(n: int) -> IntSet:
    return IntSet(tuple(range(n)))


@dataclass(frozen=True)
class GrowthSequence:
    """Strictly increasing nonnegative terms with growth margin r.

    Requires a_k > a_{k-1} + a_{k-r} for every k >= r+1 (1-indexed), the
    hypothesis under which prefixes resist sum-dominance.
    """

    terms: tuple[int, ...]
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be a positive integer")
        t = self.terms
        if not t or t[0] < 0:
            raise ValueError("terms must be nonnegative")
        if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
            raise ValueError("terms must be strictly increasing")
        if not check_growth_condition(t, self.r):
            raise ValueError(f"terms violate a_k > a_(k-1) + a_(k-r) for r={self.r}")


@dataclass(frozen=True)
class Theorem3Params:
    """Prefix/insertion parameters for the growth-sequence criterion.

    The checked prefix has size 2r + n + ell; inserting m arbitrary values is
    covered when m*size + m(m+1)/2 <= ell*(n+1).
    """

    r: int
    n: int
    ell: int
    m: int
    window: tuple[int, int]

    def __post_init__(self):
        if self.r < 1 or self.n < 0 or self.ell < 0 or self.m < 0:
            raise ValueError("need r >= 1 and n, ell, m >= 0")
        if self.window[0] > self.window[1]:
            raise ValueError("empty window")

    @property
    def prefix_size(self) -> int:
        return 2 * self.r + self.n + self.ell

    @property
    def deficit_bound(self) -> int:
        return self.ell * (self.n + 1)

    def admissibility(self) -> tuple[int, int]:
        lhs = self.m * self.prefix_size + self.m * (self.m + 1) // 2
        return lhs, self.deficit_bound

    @property
    def admissible(self) -> bool:
        lhs, rhs = self.admissibility()
        return lhs <= rhs


def check_growth_condition(terms: Sequence[int], r: int) -> bool:
    """True iff a_k > a_{k-1} + a_{k-r} for all k >= r+1 (1-indexed)."""
    return all(
        terms[k - 1] > terms[k - 2] + terms[k - r - 1]
        for k in range(r + 1, len(terms) + 1)
    )


def _timed(report: VerificationReport, t0: float) -> VerificationReport:
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def verify_small_cardinality(
    max_size: int, max_diameter: int, workers: int = 1
) -> VerificationReport:
    """Exhaust all canonical sets with |A| <= max_size and bounded diameter.

    Every sum-dominant set found is a violation; a pass certifies the slice.
    """
    if max_size < 1 or max_diameter < 0:
        raise ValueError("need max_size >= 1 and max_diameter >= 0")
    t0 = time.perf_counter()
    config = SearchConfig(
        diameter_max=max_diameter, size_max=max_size, workers=workers
    )
    examined, _pruned, _per_d, sd_sets = scan_sum_dominant(config)
    report = VerificationReport(
        check="small-cardinality",
        grid=f"size<={max_size}, diameter<={max_diameter}",
        cases=examined,
    )
    for w in sd_sets:
        report.add_violation(w, f"size={len(w)} diameter={w.diameter}")
    return _timed(report, t0)


def _rational_grid(lo: int, hi: int, q_max: int) -> list[Fraction]:
    vals = {
        Fraction(p, q) for q in range(1, q_max + 1) for p in range(lo * q, hi * q + 1)
    }
    return sorted(vals)


def verify_ap_plus_two(
    n_max: int, window: Optional[tuple[int, int]] = None, q_max: int = 2
) -> VerificationReport:
    """Check that I_n plus at most two bounded-denominator rationals never turns sum-dominant.

    The pair grid includes x = y (single insertion) and points inside I_n, so
    the one-insertion and pure-AP cases ride along for free.  Mixed
    integrality of x+y versus x-y is exercised rather than assumed.
    """
    if n_max < 1 or q_max < 1:
        raise ValueError("need n_max >= 1 and q_max >= 1")
    wdesc = f"[{window[0]},{window[1]}]" if window else "[-2n,3n]"
    report = VerificationReport(
        check="ap-plus-two",
        grid=f"n<={n_max}, x,y in {wdesc} with denominator<={q_max}",
    )
    t0 = time.perf_counter()
    for n in range(1, n_max + 1):
        lo, hi = window if window else (-2 * n, 3 * n)
        base = [Fraction(i) for i in range(n)]
        vals = _rational_grid(lo, hi, q_max)
        for i, x in enumerate(vals):
            for y in vals[i:]:
                ints, _ = scale_to_integers(
                    RationalSet.from_fractions(base + [x, y])
                )
                report.cases += 1
                if classify(ints) is SetClass.SUM_DOMINANT:
                    report.add_violation(ints, f"n={n} x={x} y={y}")
    return _timed(report, t0)


def verify_insertion_deficit(
    n_max: int, window: Optional[tuple[int, int]] = None, q_max: int = 4
) -> VerificationReport:
    """Check |A-A| >= |A+A| + 1 for A = I_n with one rational inserted.

    Applies for n >= 2 when the inserted x is not congruent to 1/2 mod 1 and
    is a genuinely new element (x outside I_n and not the AP-extending values
    -1 or n, all of which give balanced sets).
    """
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    wdesc = f"[{window[0]},{window[1]}]" if window else "[-2n,3n]"
    report = VerificationReport(
        check="insertion-deficit",
        grid=f"2<=n<={n_max}, x in {wdesc} with denominator<={q_max}, "
        f"x-1/2 not integral, x not in I_n+{{-1,n}}",
    )
    t0 = time.perf_counter()
    half = Fraction(1, 2)
    for n in range(2, n_max + 1):
        lo, hi = window if window else (-2 * n, 3 * n)
        base = [Fraction(i) for i in range(n)]
        for x in _rational_grid(lo, hi, q_max):
            if (x - half).denominator == 1:
                continue
            if x.denominator == 1 and -1 <= x <= n:
                continue
            ints, _ = scale_to_integers(RationalSet.from_fractions(base + [x]))
            report.cases += 1
            nsum, ndiff = sum_diff_sizes(ints)
            if ndiff < nsum + 1:
                report.add_violation(ints, f"n={n} x={x}")
    return _timed(report, t0)


def verify_proposition2(n_max: int) -> VerificationReport:
    """Exact insertion deltas for x = (n-1)+k into I_n: k+1 sums, k differences."""
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    report = VerificationReport(
        check="insertion-delta-exactness", grid=f"2<=n<={n_max}, 1<=k<=n-1"
    )
    t0 = time.perf_counter()
    for n in range(2, n_max + 1):
        base = _I(n)
        for k in range(1, n):
            report.cases += 1
            delta = insertion_delta(base, (n - 1) + k)
            if delta.as_tuple() != (k + 1, k):
                report.add_violation(
                    base.with_element((n - 1) + k),
                    f"n={n} k={k} got {delta.as_tuple()} want ({k + 1},{k})",
                )
    return _timed(report, t0)


def exhaustive_translation_corpus(max_diameter: int) -> Iterator[IntSet]:
    """All sets with diameter <= max_diameter, one per translation class."""
    yield IntSet((0,))
    for d in range(1, max_diameter + 1):
        ends = 1 | (1 << d)
        for interior in range(1 << (d - 1)):
            mask = ends | (interior << 1)
            yield IntSet(tuple(i for i in range(d + 1) if (mask >> i) & 1))


def random_corpus(
    trials: int,
    seed: int = DEFAULT_SEED,
    max_size: int = RANDOM_SET_MAX_SIZE,
    window: tuple[int, int] = RANDOM_SET_WINDOW,
) -> Iterator[IntSet]:
    """Seeded random sets: uniform size, then uniform distinct elements."""
    rng = random.Random(seed)
    universe = range(window[0], window[1] + 1)
    for _ in range(trials):
        yield IntSet(tuple(sorted(rng.sample(universe, rng.randint(1, max_size)))))


def verify_observation6(
    trials: int, seed: int = DEFAULT_SEED, max_diameter: int = 12
) -> VerificationReport:
    """Check 2 * equal_sum_pairs >= equal_diff_pairs, exhaustively then randomly."""
    if trials < 1:
        raise ValueError("need trials >= 1")
    from .structure import equal_diff_pairs, equal_sum_pairs

    report = VerificationReport(
        check="equal-pair-inequality",
        grid=f"exhaustive diameter<={max_diameter} plus {trials} random sets "
        f"(size<={RANDOM_SET_MAX_SIZE}, window={list(RANDOM_SET_WINDOW)})",
        seed=seed,
    )
    t0 = time.perf_counter()
    for label, corpus in (
        ("exhaustive", exhaustive_translation_corpus(max_diameter)),
        ("random", random_corpus(trials, seed)),
    ):
        for i, a in enumerate(corpus):
            report.cases += 1
            if 2 * equal_sum_pairs(a) < equal_diff_pairs(a):
                report.add_violation(a, f"{label} #{i}")
    return _timed(report, t0)


def symmetric_sets(max_diameter: int) -> Iterator[IntSet]:
    """All symmetric sets with min 0 and diameter <= max_diameter.

    Built from mirrored halves: any subset of the positions strictly left of
    the center, its mirror image, the endpoints, and (for even diameter) an
    optional center.
    """
    yield IntSet((0,))
    for d in range(1, max_diameter + 1):
        half = list(range(1, (d + 1) // 2))
        centers = ((), (d // 2,)) if d % 2 == 0 and d > 0 else ((),)
        for bits in range(1 << len(half)):
            chosen = [half[i] for i in range(len(half)) if (bits >> i) & 1]
            mirrored = [d - x for x in chosen]
            for c in centers:
                yield IntSet.from_iterable([0, d] + chosen + mirrored + list(c))


def verify_symmetric_balanced(max_diameter: int) -> VerificationReport:
    """Every generated symmetric set must classify as balanced."""
    if max_diameter < 0:
        raise ValueError("need max_diameter >= 0")
    report = VerificationReport(
        check="symmetric-balanced", grid=f"mirrored halves, diameter<={max_diameter}"
    )
    t0 = time.perf_counter()
    for a in symmetric_sets(max_diameter):
        report.cases += 1
        if classify(a) is not SetClass.BALANCED:
            report.add_violation(a, f"diameter={a.diameter}")
    return _timed(report, t0)


def verify_growth_criterion(
    seq: GrowthSequence,
    params: Theorem3Params,
    subset_budget: int = 50,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Check the growth-sequence criterion on prefixes, subsets and insertions.

    Pre-checks that no subset of the supplied terms with size <= 2r+n is
    sum-dominant, then asserts for the prefix of size 2r+n+ell (and up to
    subset_budget random same-size subsets) that the set is not sum-dominant
    with |S-S| - |S+S| >= ell*(n+1), and that inserting every m-tuple from
    the window (exhaustive for m = 1, seeded sample otherwise) never yields a
    sum-dominant set.
    """
    if params.r != seq.r:
        raise ValueError(f"params.r={params.r} does not match sequence r={seq.r}")
    size = params.prefix_size
    if len(seq.terms) < size:
        raise ValueError(f"need at least {size} terms, got {len(seq.terms)}")
    if params.m >= 1 and not params.admissible:
        lhs, rhs = params.admissibility()
        raise ValueError(
            f"inadmissible insertion count: m*|S| + m(m+1)/2 = {lhs} > {rhs} = ell*(n+1)"
        )

    lo, hi = params.window
    report = VerificationReport(
        check="growth-criterion",
        grid=f"{len(seq.terms)} terms, r={params.r}, n={params.n}, "
        f"ell={params.ell}, m={params.m}, window=[{lo},{hi}]",
        seed=seed,
    )
    t0 = time.perf_counter()

    # hypothesis: no small subset of the terms is sum-dominant
    small_cap = 2 * params.r + params.n
    for k in range(1, small_cap + 1):
        for sub in combinations(seq.terms, k):
            report.cases += 1
            a = IntSet(sub)
            if classify(a) is SetClass.SUM_DOMINANT:
                report.add_violation(a, f"hypothesis subset size={k}")

    rng = random.Random(seed)
    subjects = [IntSet(seq.terms[:size])]
    if len(seq.terms) > size:
        for _ in range(subset_budget):
            idx = sorted(rng.sample(range(len(seq.terms)), size))
            subjects.append(IntSet(tuple(seq.terms[i] for i in idx)))

    bound = params.deficit_bound
    for si, s in enumerate(subjects):
        label = "prefix" if si == 0 else f"subset#{si}"
        report.cases += 1
        nsum, ndiff = sum_diff_sizes(s)
        deficit = ndiff - nsum
        if nsum > ndiff or deficit < bound:
            report.add_violation(s, f"{label} deficit={deficit} < {bound}")
        if si == 0:
            rel = "=" if deficit == bound else ">"
            report.notes.append(
                f"prefix deficit |S-S|-|S+S| = {deficit} {rel} {bound} = ell*(n+1)"
            )
        if params.m == 0:
            continue
        if params.m == 1:
            tuples = ((b,) for b in range(lo, hi + 1))
        else:
            tuples = (
                tuple(sorted(rng.sample(range(lo, hi + 1), params.m)))
                for _ in range(subset_budget)
            )
        for bs in tuples:
            report.cases += 1
            star = IntSet.from_iterable(s.elements + bs)
            if classify(star) is SetClass.SUM_DOMINANT:
                report.add_violation(star, f"{label} + {list(bs)}")

    lhs, rhs = params.admissibility()
    if params.m >= 1:
        rel = "=" if lhs == rhs else "<"
        report.notes.append(f"admissibility m*|S|+m(m+1)/2 = {lhs} {rel} {rhs}")
    return _timed(report, t0)


def verify_size5_witnesses() -> VerificationReport:
    """The two size-5 boundary sets must be balanced with 11 sums and 11 differences."""
    report = VerificationReport(check="size5-witnesses", grid="two fixed sets")
    t0 = time.perf_counter()
    for els in ((0, 1, 3, 4, 5), (0, 1, 2, 4, 5)):
        report.cases += 1
        a = IntSet(els)
        nsum, ndiff = sum_diff_sizes(a)
        if not (nsum == ndiff == 11):
            report.add_violation(a, f"sizes ({nsum},{ndiff}) != (11,11)")
    return _timed(report, t0)
