"""Canonical enumeration and high-throughput search for sum-dominant sets.

The search space is one representative per affine equivalence class
(translation, positive dilation, reflection): subsets of [0, D] that contain
both 0 and D, whose element gcd is 1, and that are lexicographically <= their
reflection.  For masks anchored at 0 the lexicographic test reduces to an
integer comparison against the bit-reversed mask.

Enumeration is partitioned by (diameter, low-bit residue of the interior
mask); partitions are independent work units whose tallies merge by
addition, so results do not depend on scheduling.  A checkpoint file of
line-delimited JSON records lets long sweeps resume.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd
from typing import Callable, Iterator, Optional

from .reports import VerificationReport
from .setcore import (
    APSpec,
    IntSet,
    SetClass,
    ap_plus_two_decomposition,
    classify,
    profile,
)

# Default diameter ceiling for open-ended sweeps; an engineering choice,
# always echoed in reports.
DEFAULT_SWEEP_DIAMETER = 24

_REV8 = tuple(int(f"{b:08b}"[::-1], 2) for b in range(256))


def _reverse_mask(mask: int, width: int) -> int:
    """Bit-reverse an integer of the given width."""
    rev = 0
    nbytes = (width + 7) // 8
    for _ in range(nbytes):
        rev = (rev << 8) | _REV8[mask & 0xFF]
        mask >>= 8
    return rev >> (8 * nbytes - width)


@dataclass
class SearchConfig:
    diameter_min: int = 0
    diameter_max: int = DEFAULT_SWEEP_DIAMETER
    size_min: Optional[int] = None
    size_max: Optional[int] = None
    prune_ap_plus_two: bool = False
    prune_symmetric: bool = False
    workers: int = 1
    checkpoint_path: Optional[str] = None

    def __post_init__(self):
        if not 0 <= self.diameter_min <= self.diameter_max:
            raise ValueError("need 0 <= diameter_min <= diameter_max")
        lo = 1 if self.size_min is None else self.size_min
        hi = self.size_max
        if lo < 1 or (hi is not None and hi < lo):
            raise ValueError("inconsistent size bounds")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    def size_range(self) -> tuple[int, int]:
        lo = 1 if self.size_min is None else self.size_min
        hi = (self.diameter_max + 1) if self.size_max is None else self.size_max
        return lo, hi


@dataclass
class SearchResult:
    min_mstd_size: Optional[int]
    witnesses: list  # [(IntSet, SetProfile)], reflection-canonical, sorted
    sets_examined: int
    sets_pruned: int
    per_diameter: dict
    config: SearchConfig

    def to_json_dict(self) -> dict:
        cfg = self.config
        return {
            "config": {
                "diameter_min": cfg.diameter_min,
                "diameter_max": cfg.diameter_max,
                "size_min": cfg.size_min,
                "size_max": cfg.size_max,
                "prune_ap_plus_two": cfg.prune_ap_plus_two,
                "prune_symmetric": cfg.prune_symmetric,
            },
            "min_mstd_size": self.min_mstd_size,
            "witnesses": [
                {"set": str(a), "profile": p.to_json_dict()}
                for a, p in self.witnesses
            ],
            "sets_examined": self.sets_examined,
            "sets_pruned": self.sets_pruned,
            "per_diameter": {
                str(d): dict(t) for d, t in sorted(self.per_diameter.items())
            },
        }


def iter_normalized(config: SearchConfig) -> Iterator[IntSet]:
    """Yield one canonical representative per affine class.

    Order is deterministic: diameter ascending, then lexicographic on the
    element tuple.  Each class appears exactly once.
    """
    size_lo, size_hi = config.size_range()
    for d in range(config.diameter_min, config.diameter_max + 1):
        if d == 0:
            if size_lo <= 1 <= size_hi:
                yield IntSet((0,))
            continue
        yield from _lex_dfs((0,), 0, d, size_lo, size_hi)


def _lex_dfs(prefix, g, d, size_lo, size_hi) -> Iterator[IntSet]:
    # g carries the running gcd of the prefix elements
    last = prefix[-1]
    for e in range(last + 1, d + 1):
        ge = gcd(g, e)
        if e == d:
            n = len(prefix) + 1
            if size_lo <= n <= size_hi and (ge == 1 or n == 1):
                els = prefix + (d,)
                refl = tuple(d - x for x in reversed(els))
                if els <= refl:
                    yield IntSet(els)
        elif len(prefix) + 2 <= size_hi:
            yield from _lex_dfs(prefix + (e,), ge, d, size_lo, size_hi)


def enumerate_normalized(
    config: SearchConfig, visitor: Callable[[IntSet], None]
) -> dict:
    """Apply ``visitor`` to every canonical class in order; return tallies."""
    per_diameter: dict[int, int] = {}
    total = 0
    for a in iter_normalized(config):
        visitor(a)
        total += 1
        per_diameter[a.diameter] = per_diameter.get(a.diameter, 0) + 1
    return {"visited": total, "per_diameter": per_diameter}


def _interior_range(d: int, size_lo: int, size_hi: int) -> tuple[int, int]:
    # interior element counts compatible with the size bounds ({0, d} is fixed)
    return max(0, size_lo - 2), min(d - 1, size_hi - 2)


def _combos_cheaper(d: int, size_lo: int, size_hi: int) -> bool:
    """Size-bounded combination enumeration beats the full mask sweep."""
    if d <= 1:
        return False
    k_lo, k_hi = _interior_range(d, size_lo, size_hi)
    if k_hi < k_lo:
        return True
    total = sum(comb(d - 1, k) for k in range(k_lo, k_hi + 1))
    return 8 * total < (1 << (d - 1))


def _partition_count(d: int, size_lo: int, size_hi: int) -> int:
    # fixed per (diameter, size bounds) so partition ids are stable across
    # worker counts; the combination path is cheap enough to stay unsplit
    if _combos_cheaper(d, size_lo, size_hi):
        return 1
    return 1 << max(0, min(8, d - 16))


def _partitions(config: SearchConfig) -> list[tuple[int, int, int]]:
    size_lo, size_hi = config.size_range()
    parts = []
    for d in range(config.diameter_min, config.diameter_max + 1):
        p = _partition_count(d, size_lo, size_hi)
        for j in range(p):
            parts.append((d, j, p))
    return parts


def _scan_partition(args) -> tuple[int, int, int, int, list[int]]:
    """Scan one (diameter, residue) slice of the canonical space.

    Returns (diameter, examined, pruned, sum_dominant_count, sd_masks).
    """
    d, j, p, size_lo, size_hi, prune_sym, prune_ap2 = args
    examined = pruned = 0
    sd_masks: list[int] = []
    if d == 0:
        if j == 0 and size_lo <= 1 <= size_hi:
            examined = 1  # the singleton class {0}; never sum-dominant
        return d, examined, pruned, 0, sd_masks
    ends = 1 | (1 << d)
    width = d + 1
    if _combos_cheaper(d, size_lo, size_hi):
        k_lo, k_hi = _interior_range(d, size_lo, size_hi)
        masks = (
            ends | sum(1 << e for e in chosen)
            for k in range(k_lo, k_hi + 1)
            for chosen in combinations(range(1, d), k)
        )
    else:
        masks = (
            ends | (interior << 1) for interior in range(j, 1 << (d - 1), p)
        )
    for mask in masks:
        n = mask.bit_count()
        if not size_lo <= n <= size_hi:
            continue
        g = 0
        m = mask ^ 1  # drop element 0; it contributes nothing to the gcd
        while m:
            lsb = m & -m
            g = gcd(g, lsb.bit_length() - 1)
            if g == 1:
                break
            m ^= lsb
        if g != 1:
            continue
        rev = _reverse_mask(mask, width)
        if mask > rev:
            continue
        examined += 1
        if prune_sym and mask == rev:
            pruned += 1
            continue
        if prune_ap2 and ap_plus_two_decomposition(_mask_to_intset(mask)) is not None:
            pruned += 1
            continue
        nsum, ndiff = _mask_sum_diff_sizes(mask)
        if nsum > ndiff:
            sd_masks.append(mask)
    return d, examined, pruned, len(sd_masks), sd_masks


def _mask_to_intset(mask: int) -> IntSet:
    els = []
    while mask:
        lsb = mask & -mask
        els.append(lsb.bit_length() - 1)
        mask ^= lsb
    return IntSet(tuple(els))


def _mask_sum_diff_sizes(mask: int) -> tuple[int, int]:
    sums = 0
    diffs = mask
    m = mask
    while m:
        lsb = m & -m
        i = lsb.bit_length() - 1
        sums |= mask << i
        diffs |= mask >> i
        m ^= lsb
    return sums.bit_count(), 2 * diffs.bit_count() - 1


def _partition_id(d: int, j: int) -> str:
    return f"{d}/{j}"


def _load_checkpoint(path: str) -> dict:
    records = {}
    if path and os.path.exists(path):
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    rec = json.loads(line)
                    records[rec["partition_id"]] = rec
    return records


def scan_sum_dominant(
    config: SearchConfig,
) -> tuple[int, int, dict, list[IntSet]]:
    """Scan the canonical space and collect every sum-dominant set.

    Returns (sets_examined, sets_pruned, per-diameter tallies, sum-dominant
    sets sorted by diameter then elements).  Honors workers and checkpoint.
    """
    size_lo, size_hi = config.size_range()
    done = _load_checkpoint(config.checkpoint_path) if config.checkpoint_path else {}

    todo = []
    results = []  # (d, j, examined, pruned, sd_count, sd_masks) in partition order
    for d, j, p in _partitions(config):
        pid = _partition_id(d, j)
        if pid in done:
            t = done[pid]["tallies"]
            masks = [IntSet.parse(s).mask()[0] for s in t["sum_dominant"]]
            results.append((d, j, t["examined"], t["pruned"], len(masks), masks))
        else:
            todo.append((d, j, p, size_lo, size_hi,
                         config.prune_symmetric, config.prune_ap_plus_two))

    # results stream back in partition order; checkpoint records are appended
    # as they arrive so an interrupted sweep loses at most one partition
    pool = None
    if config.workers > 1 and len(todo) > 1:
        pool = ProcessPoolExecutor(max_workers=config.workers)
        chunk = max(1, len(todo) // (config.workers * 4))
        fresh = pool.map(_scan_partition, todo, chunksize=chunk)
    else:
        fresh = map(_scan_partition, todo)
    ckpt = None
    if config.checkpoint_path:
        ckpt = open(config.checkpoint_path, "a", encoding="utf-8")
    try:
        for (d, j, *_), (rd, examined, pruned, sd_count, sd_masks) in zip(todo, fresh):
            results.append((rd, j, examined, pruned, sd_count, sd_masks))
            if ckpt is not None:
                rec = {
                    "partition_id": _partition_id(d, j),
                    "diameter": d,
                    "tallies": {
                        "examined": examined,
                        "pruned": pruned,
                        "sum_dominant": [
                            str(_mask_to_intset(m)) for m in sd_masks
                        ],
                    },
                }
                ckpt.write(json.dumps(rec, separators=(",", ":")) + "\n")
                ckpt.flush()
    finally:
        if ckpt is not None:
            ckpt.close()
        if pool is not None:
            pool.shutdown()

    per_diameter: dict[int, dict] = {}
    total_examined = total_pruned = 0
    found: list[IntSet] = []
    for d, _j, examined, pruned, sd_count, sd_masks in results:
        tally = per_diameter.setdefault(
            d, {"examined": 0, "pruned": 0, "sum_dominant": 0}
        )
        tally["examined"] += examined
        tally["pruned"] += pruned
        tally["sum_dominant"] += sd_count
        total_examined += examined
        total_pruned += pruned
        found.extend(_mask_to_intset(m) for m in sd_masks)

    found.sort(key=lambda w: (w.diameter, w.elements))
    return total_examined, total_pruned, per_diameter, found


def find_min_mstd(config: SearchConfig) -> SearchResult:
    """Exhaustively locate the smallest sum-dominant sets in the search space.

    Reports the minimum cardinality attained, every canonical witness of that
    cardinality, and per-diameter tallies.  Pruning flags (sound by the
    AP-plus-two theorem and the symmetric-implies-balanced lemma) affect only
    the pruned tally, never the witnesses.
    """
    examined, pruned, per_diameter, found = scan_sum_dominant(config)
    min_size = min((len(w) for w in found), default=None)
    best = [w for w in found if len(w) == min_size]
    return SearchResult(
        min_mstd_size=min_size,
        witnesses=[(w, profile(w)) for w in best],
        sets_examined=examined,
        sets_pruned=pruned,
        per_diameter=per_diameter,
        config=config,
    )


def explore_two_ap_unions(
    max_len: int, max_step: int, max_shift: int
) -> VerificationReport:
    """Classify every union of two arithmetic progressions on the grid.

    The first progression starts at 0 (translation), steps satisfy d1 <= d2
    (swap symmetry), and the second progression's start ranges over
    [-max_shift, max_shift].  Any sum-dominant union is reported as a
    counterexample; a clean run is a statement about this grid only.
    """
    if min(max_len, max_step, max_shift) < 1:
        raise ValueError("all grid bounds must be >= 1")
    report = VerificationReport(
        check="two-ap-unions",
        grid=f"lengths<={max_len}, steps<={max_step}, |shift|<={max_shift}",
    )
    t0 = time.perf_counter()
    for n1 in range(1, max_len + 1):
        for d1 in range(1, max_step + 1):
            first = APSpec(0, d1, n1).elements()
            for n2 in range(1, max_len + 1):
                for d2 in range(d1, max_step + 1):
                    for a2 in range(-max_shift, max_shift + 1):
                        second = APSpec(a2, d2, n2).elements()
                        u = IntSet.from_iterable(first + second)
                        report.cases += 1
                        if classify(u) is SetClass.SUM_DOMINANT:
                            report.add_violation(
                                u,
                                f"AP(0,{d1},{n1}) + AP({a2},{d2},{n2})",
                            )
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def explore_min_additions(
    ap: APSpec, k_max: int, window: tuple[int, int]
) -> VerificationReport:
    """Search for the fewest window integers whose insertion makes an AP sum-dominant.

    For each k up to k_max, tries every k-subset of the window in
    lexicographic order and records the first sum-dominant superset found.
    Hits at k <= 2 are impossible by the AP-plus-two theorem and are
    reported as violations; larger k outcomes land in the notes.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    lo, hi = window
    base = ap.elements()
    candidates = [x for x in range(lo, hi + 1) if x not in base]
    report = VerificationReport(
        check="min-additions",
        grid=f"AP({ap.first},{ap.step},{ap.length}), k<={k_max}, window=[{lo},{hi}]",
    )
    t0 = time.perf_counter()
    for k in range(1, k_max + 1):
        hit = None
        for extra in combinations(candidates, k):
            u = IntSet.from_iterable(base + extra)
            report.cases += 1
            if classify(u) is SetClass.SUM_DOMINANT:
                hit = (extra, u)
                break
        if hit is None:
            report.notes.append(f"k={k}: no sum-dominant superset")
        else:
            extra, u = hit
            added = ",".join(str(x) for x in extra)
            report.notes.append(
                f"k={k}: first sum-dominant superset {u} (added {added})"
            )
            if k <= 2:
                report.add_violation(u, f"k={k} additions {added}")
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report
