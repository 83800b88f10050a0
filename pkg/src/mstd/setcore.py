"""Exact arithmetic, classification, and canonical forms for finite integer sets.

Sets are immutable, sorted tuples of integers.  Sumset/difference-set
cardinalities are computed on a dense bitmask over the set's window (a Python
int doubles as an arbitrary-width machine bitset), falling back to hashed
pairwise enumeration when the window is enormous relative to the set size.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Optional


class EmptySetError(ValueError):
    """Raised when an operation needs at least one element."""


class SetLiteralError(ValueError):
    """Malformed set literal; carries the 1-based index of the bad token."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class SetClass(enum.Enum):
    SUM_DOMINANT = "sum-dominant"
    BALANCED = "balanced"
    DIFFERENCE_DOMINANT = "difference-dominant"


@dataclass(frozen=True)
class IntSet:
    """Finite set of integers, stored strictly increasing."""

    elements: tuple[int, ...]

    def __post_init__(self):
        els = self.elements
        if any(els[i] >= els[i + 1] for i in range(len(els) - 1)):
            raise ValueError(f"elements must be strictly increasing: {els}")

    @classmethod
    def from_iterable(cls, xs: Iterable[int]) -> "IntSet":
        return cls(tuple(sorted(set(int(x) for x in xs))))

    @classmethod
    def parse(cls, text: str) -> "IntSet":
        """Parse a comma-separated integer literal like "0,2,3,4"."""
        return cls.from_iterable(_parse_tokens(text, allow_rational=False))

    @property
    def min(self) -> int:
        self._require_nonempty()
        return self.elements[0]

    @property
    def max(self) -> int:
        self._require_nonempty()
        return self.elements[-1]

    @property
    def diameter(self) -> int:
        return self.max - self.min

    def _require_nonempty(self):
        if not self.elements:
            raise EmptySetError("operation requires a nonempty set")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.elements)

    def translate(self, t: int) -> "IntSet":
        return IntSet(tuple(e + t for e in self.elements))

    def dilate(self, c: int) -> "IntSet":
        if c == 0:
            raise ValueError("dilation factor must be nonzero")
        scaled = [e * c for e in self.elements]
        return IntSet(tuple(scaled if c > 0 else reversed(scaled)))

    def reflected(self) -> "IntSet":
        """Mirror image max+min-A (an affine image, same classification)."""
        self._require_nonempty()
        a = self.min + self.max
        return IntSet(tuple(a - e for e in reversed(self.elements)))

    def with_element(self, x: int) -> "IntSet":
        return IntSet.from_iterable(self.elements + (x,))

    def mask(self) -> tuple[int, int]:
        """Dense bitmask of A - min(A) plus the offset min(A)."""
        self._require_nonempty()
        lo = self.elements[0]
        m = 0
        for e in self.elements:
            m |= 1 << (e - lo)
        return m, lo


@dataclass(frozen=True)
class APSpec:
    """Arithmetic progression {first + i*step : 0 <= i < length}."""

    first: int
    step: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("length must be >= 1")
        if self.step < 1:
            raise ValueError("step must be a positive integer")

    def elements(self) -> tuple[int, ...]:
        return tuple(self.first + i * self.step for i in range(self.length))

    def to_intset(self) -> IntSet:
        return IntSet(self.elements())

    def to_json_dict(self) -> dict:
        return {"first": self.first, "step": self.step, "length": self.length}


@dataclass(frozen=True)
class AffineTransform:
    """Record of x -> scale*x + shift mapping a normalized set back to its original."""

    shift: int
    scale: int

    def apply(self, a: IntSet) -> IntSet:
        return a.dilate(self.scale).translate(self.shift)


@dataclass(frozen=True)
class RationalSet:
    """Exact rationals as integer numerators over one positive denominator.

    Normalized so gcd(denominator, gcd of numerators) = 1, which keeps the
    representation unique without changing any element value.
    """

    numerators: IntSet
    denominator: int

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("denominator must be a positive integer")
        g = self.denominator
        for n in self.numerators:
            g = gcd(g, n)
        if g > 1:
            object.__setattr__(
                self, "numerators", IntSet(tuple(n // g for n in self.numerators))
            )
            object.__setattr__(self, "denominator", self.denominator // g)

    @classmethod
    def from_fractions(cls, xs: Iterable[Fraction]) -> "RationalSet":
        fracs = sorted(set(Fraction(x) for x in xs))
        den = 1
        for f in fracs:
            den = lcm(den, f.denominator)
        nums = IntSet(tuple(int(f * den) for f in fracs))
        return cls(nums, den)

    @classmethod
    def parse(cls, text: str) -> "RationalSet":
        """Parse a literal like "0,1,5/2" (shared denominator computed here)."""
        return cls.from_fractions(_parse_tokens(text, allow_rational=True))

    def elements(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.denominator) for n in self.numerators)


@dataclass(frozen=True)
class SetProfile:
    """Full classification record for one set."""

    size: int
    sum_size: int
    diff_size: int
    set_class: SetClass
    equal_sum_pairs: int
    equal_diff_pairs: int
    diameter: int
    symmetry_center: Optional[int]
    ap: Optional[APSpec]

    def to_json_dict(self) -> dict:
        return {
            "size": self.size,
            "sum_size": self.sum_size,
            "diff_size": self.diff_size,
            "class": self.set_class.value,
            "equal_sum_pairs": self.equal_sum_pairs,
            "equal_diff_pairs": self.equal_diff_pairs,
            "diameter": self.diameter,
            "symmetry_center": self.symmetry_center,
            "ap": self.ap.to_json_dict() if self.ap else None,
        }


def _parse_tokens(text: str, allow_rational: bool):
    vals = []
    for i, tok in enumerate(text.split(","), start=1):
        tok = tok.strip()
        if not tok:
            raise SetLiteralError(f"empty token at position {i}", i)
        try:
            if "/" in tok:
                if not allow_rational:
                    raise ValueError("rational tokens not allowed here")
                p, q = tok.split("/")
                vals.append(Fraction(int(p), int(q)))
            else:
                vals.append(int(tok))
        except (ValueError, ZeroDivisionError) as exc:
            raise SetLiteralError(
                f"invalid token {tok!r} at position {i}: {exc}", i
            ) from None
    if not vals:
        raise SetLiteralError("empty set literal", 1)
    return vals


# Window wider than this many bits per squared set size switches the kernel
# from the dense bitmask to hashed pairwise enumeration.
_DENSE_BITS_PER_PAIR = 64


def _use_dense(size: int, diameter: int) -> bool:
    return diameter + 1 <= _DENSE_BITS_PER_PAIR * size * size


def _bit_indices(mask: int) -> Iterator[int]:
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


def _sum_diff_masks(mask: int) -> tuple[int, int]:
    """Bit-parallel A+A (width 2D+1) and nonnegative A-A (width D+1) of a mask."""
    sums = 0
    diffs = mask  # shift by element 0: the window is anchored at min(A)
    m = mask
    while m:
        lsb = m & -m
        i = lsb.bit_length() - 1
        sums |= mask << i
        diffs |= mask >> i
        m ^= lsb
    return sums, diffs


def sum_diff_sizes(a: IntSet) -> tuple[int, int]:
    """(|A+A|, |A-A|) without materializing either set."""
    a._require_nonempty()
    els = a.elements
    if _use_dense(len(els), a.diameter):
        sums, diffs = _sum_diff_masks(a.mask()[0])
        return sums.bit_count(), 2 * diffs.bit_count() - 1
    nsums = len({x + y for x in els for y in els})
    npos = len({y - x for x in els for y in els if y > x})
    return nsums, 2 * npos + 1


def sumset(a: IntSet) -> IntSet:
    """All pairwise sums a_i + a_j (i = j allowed)."""
    a._require_nonempty()
    els = a.elements
    if _use_dense(len(els), a.diameter):
        mask, lo = a.mask()
        sums, _ = _sum_diff_masks(mask)
        return IntSet(tuple(i + 2 * lo for i in _bit_indices(sums)))
    return IntSet.from_iterable(x + y for x in els for y in els)


def diffset(a: IntSet) -> IntSet:
    """All pairwise differences a_i - a_j, symmetric about 0."""
    a._require_nonempty()
    els = a.elements
    if _use_dense(len(els), a.diameter):
        mask, _ = a.mask()
        _, diffs = _sum_diff_masks(mask)
        nonneg = tuple(_bit_indices(diffs))
        return IntSet(tuple(-v for v in reversed(nonneg[1:])) + nonneg)
    return IntSet.from_iterable(x - y for x in els for y in els)


def classify(a: IntSet) -> SetClass:
    """Compare |A+A| against |A-A|."""
    nsum, ndiff = sum_diff_sizes(a)
    if nsum > ndiff:
        return SetClass.SUM_DOMINANT
    if nsum < ndiff:
        return SetClass.DIFFERENCE_DOMINANT
    return SetClass.BALANCED


def is_symmetric(a: IntSet) -> Optional[int]:
    """Center a with A = a - A, if any.  The only candidate is min+max."""
    a._require_nonempty()
    c = a.min + a.max
    els = a.elements
    n = len(els)
    if all(els[i] + els[n - 1 - i] == c for i in range(n // 2 + 1)):
        return c
    return None


def detect_ap(a: IntSet) -> Optional[APSpec]:
    """APSpec iff all consecutive gaps are equal; any set of size <= 2 qualifies."""
    a._require_nonempty()
    els = a.elements
    if len(els) == 1:
        return APSpec(els[0], 1, 1)
    step = els[1] - els[0]
    if any(els[i + 1] - els[i] != step for i in range(1, len(els) - 1)):
        return None
    return APSpec(els[0], step, len(els))


def profile(a: IntSet) -> SetProfile:
    """Aggregate classification, pair counts, symmetry and AP structure."""
    from .structure import equal_diff_pairs, equal_sum_pairs

    nsum, ndiff = sum_diff_sizes(a)
    if nsum > ndiff:
        cls = SetClass.SUM_DOMINANT
    elif nsum < ndiff:
        cls = SetClass.DIFFERENCE_DOMINANT
    else:
        cls = SetClass.BALANCED
    return SetProfile(
        size=len(a),
        sum_size=nsum,
        diff_size=ndiff,
        set_class=cls,
        equal_sum_pairs=equal_sum_pairs(a),
        equal_diff_pairs=equal_diff_pairs(a),
        diameter=a.diameter,
        symmetry_center=is_symmetric(a),
        ap=detect_ap(a),
    )


def affine_normalize(a: IntSet) -> tuple[IntSet, AffineTransform]:
    """Translate to min 0 and divide out the gcd of gaps (scale 1 for singletons)."""
    a._require_nonempty()
    lo = a.min
    g = 0
    for e in a.elements:
        g = gcd(g, e - lo)
    if g == 0:
        g = 1  # singleton
    return IntSet(tuple((e - lo) // g for e in a.elements)), AffineTransform(lo, g)


def is_normalized(a: IntSet) -> bool:
    if not a.elements or a.min != 0:
        return False
    g = 0
    for e in a.elements:
        g = gcd(g, e)
    return g == 1 or len(a) == 1


def reflect_canonical(a: IntSet) -> IntSet:
    """Lexicographic minimum of a normalized set and its reflection."""
    if not is_normalized(a):
        raise ValueError(f"input must be normalized (min 0, gap gcd 1): {a}")
    r = a.reflected()
    return a if a.elements <= r.elements else r


def scale_to_integers(r: RationalSet) -> tuple[IntSet, int]:
    """Clear the denominator; a dilation, so classification is unchanged."""
    return r.numerators, r.denominator


def ap_plus_two_decomposition(a: IntSet) -> Optional[tuple[APSpec, IntSet]]:
    """Split A = B ∪ E with B an arithmetic progression and |E| <= 2.

    Searches removals exhaustively, preferring the smallest E and then the
    lexicographically smallest E.  None when no such split exists.
    """
    a._require_nonempty()
    els = a.elements
    n = len(els)
    ap = detect_ap(a)
    if ap is not None:
        return ap, IntSet(())
    for i in range(n):
        rest = IntSet(els[:i] + els[i + 1 :])
        ap = detect_ap(rest) if len(rest) >= 1 else None
        if ap is not None:
            return ap, IntSet((els[i],))
    for i in range(n):
        for j in range(i + 1, n):
            kept = els[:i] + els[i + 1 : j] + els[j + 1 :]
            if not kept:
                continue
            ap = detect_ap(IntSet(kept))
            if ap is not None:
                return ap, IntSet((els[i], els[j]))
    return None
