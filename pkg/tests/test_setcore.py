from fractions import Fraction

import pytest

from mstd import (
    APSpec,
    EmptySetError,
    IntSet,
    RationalSet,
    SetClass,
    SetLiteralError,
    affine_normalize,
    ap_plus_two_decomposition,
    classify,
    detect_ap,
    diffset,
    is_symmetric,
    profile,
    reflect_canonical,
    scale_to_integers,
    sumset,
)
from conftest import A1, naive_diffset, naive_sumset


class TestIntSet:
    def test_ordering_enforced(self):
        with pytest.raises(ValueError):
            IntSet((3, 1))
        with pytest.raises(ValueError):
            IntSet((1, 1))

    def test_from_iterable_dedups(self):
        assert IntSet.from_iterable([3, 1, 3, -2]).elements == (-2, 1, 3)

    def test_parse(self):
        assert IntSet.parse("0,2, 3").elements == (0, 2, 3)
        assert IntSet.parse("-3,5").elements == (-3, 5)

    def test_parse_errors_carry_position(self):
        with pytest.raises(SetLiteralError) as exc:
            IntSet.parse("0,,1")
        assert exc.value.position == 2
        with pytest.raises(SetLiteralError):
            IntSet.parse("0,x")
        with pytest.raises(SetLiteralError):
            IntSet.parse("0,1/2")  # rationals rejected for plain integer sets

    def test_empty_guards(self):
        empty = IntSet(())
        for op in (sumset, diffset, classify, profile, is_symmetric, detect_ap):
            with pytest.raises(EmptySetError):
                op(empty)

    def test_str_roundtrip(self, a1_set):
        assert str(a1_set) == "0,2,3,4,7,11,12,14"
        assert IntSet.parse(str(a1_set)) == a1_set


class TestSumDiff:
    def test_two_element(self):
        assert sumset(IntSet((0, 1))).elements == (0, 1, 2)
        assert diffset(IntSet((0, 1))).elements == (-1, 0, 1)

    def test_minimal_set_sumset(self, a1_set):
        s = sumset(a1_set)
        assert len(s) == 26
        assert sorted(set(range(29)) - set(s.elements)) == [1, 20, 27]
        assert list(s.elements) == naive_sumset(A1)

    def test_minimal_set_diffset(self, a1_set):
        d = diffset(a1_set)
        assert len(d) == 25
        assert [x for x in d if x > 0] == [1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12, 14]
        assert list(d.elements) == naive_diffset(A1)

    def test_ap_sumset(self):
        assert sumset(IntSet(tuple(range(5)))).elements == tuple(range(9))

    def test_sidon_triple(self):
        assert diffset(IntSet((0, 1, 3))).elements == (-3, -2, -1, 0, 1, 2, 3)

    def test_huge_diameter_sparse_path(self):
        # far too wide for the dense window; must fall back and stay exact
        a = IntSet((0, 1, 10**9))
        assert list(sumset(a).elements) == naive_sumset(a.elements)
        assert list(diffset(a).elements) == naive_diffset(a.elements)


class TestClassify:
    def test_minimal_sum_dominant(self, a1_set):
        assert classify(a1_set) is SetClass.SUM_DOMINANT

    def test_balanced_witness(self):
        a = IntSet((0, 1, 2, 4, 5))
        assert classify(a) is SetClass.BALANCED
        p = profile(a)
        assert (p.sum_size, p.diff_size) == (11, 11)

    def test_difference_dominant(self):
        a = IntSet((0, 1, 3))
        assert classify(a) is SetClass.DIFFERENCE_DOMINANT
        p = profile(a)
        assert (p.sum_size, p.diff_size) == (6, 7)


class TestProfile:
    def test_small_ap(self):
        p = profile(IntSet((0, 1, 2)))
        assert (p.size, p.sum_size, p.diff_size) == (3, 5, 5)
        assert p.set_class is SetClass.BALANCED
        assert p.symmetry_center == 2
        assert p.ap == APSpec(0, 1, 3)

    def test_minimal_set(self, a1_set):
        p = profile(a1_set)
        assert (p.size, p.sum_size, p.diff_size) == (8, 26, 25)
        assert p.set_class is SetClass.SUM_DOMINANT
        assert p.symmetry_center is None
        assert p.ap is None
        assert p.diameter == 14

    def test_symmetric_subset(self):
        p = profile(IntSet((0, 2, 3, 7, 11, 12, 14)))
        assert p.symmetry_center == 14
        assert p.set_class is SetClass.BALANCED

    def test_json_field_names(self):
        d = profile(IntSet((0, 1, 2))).to_json_dict()
        assert list(d) == [
            "size", "sum_size", "diff_size", "class", "equal_sum_pairs",
            "equal_diff_pairs", "diameter", "symmetry_center", "ap",
        ]
        assert d["class"] == "balanced"
        assert d["ap"] == {"first": 0, "step": 1, "length": 3}


class TestAffine:
    def test_normalize_ap(self):
        normalized, t = affine_normalize(IntSet((3, 7, 11)))
        assert normalized.elements == (0, 1, 2)
        assert (t.shift, t.scale) == (3, 4)
        assert t.apply(normalized) == IntSet((3, 7, 11))

    def test_normalize_gap_gcd(self):
        normalized, _ = affine_normalize(IntSet((0, 2, 4, 12, 14)))
        assert normalized.elements == (0, 1, 2, 6, 7)

    def test_singleton(self):
        normalized, t = affine_normalize(IntSet((5,)))
        assert normalized.elements == (0,)
        assert (t.shift, t.scale) == (5, 1)

    def test_negative_min(self):
        normalized, t = affine_normalize(IntSet((-6, -2, 2)))
        assert normalized.elements == (0, 1, 2)
        assert (t.shift, t.scale) == (-6, 4)


class TestReflectCanonical:
    def test_prefers_lex_smaller(self):
        assert reflect_canonical(IntSet((0, 1, 3))).elements == (0, 1, 3)
        assert reflect_canonical(IntSet((0, 2, 3))).elements == (0, 1, 3)

    def test_minimal_set_orbit(self, a1_set):
        mirrored = IntSet(tuple(sorted(14 - e for e in A1)))
        assert reflect_canonical(a1_set) == a1_set
        assert reflect_canonical(mirrored) == a1_set

    def test_symmetric_fixed_point(self):
        assert reflect_canonical(IntSet((0, 1, 2))).elements == (0, 1, 2)

    def test_rejects_non_normalized(self):
        with pytest.raises(ValueError):
            reflect_canonical(IntSet((1, 2)))
        with pytest.raises(ValueError):
            reflect_canonical(IntSet((0, 2, 4)))


class TestRationalSet:
    def test_scale_to_integers(self):
        r = RationalSet(IntSet((0, 2, 5)), 2)  # {0, 1, 5/2}
        ints, scale = scale_to_integers(r)
        assert ints.elements == (0, 2, 5)
        assert scale == 2

    def test_half_inserted_into_ap(self):
        r = RationalSet.from_fractions(
            [Fraction(0), Fraction(1), Fraction(2), Fraction(3), Fraction(7, 2)]
        )
        ints, scale = scale_to_integers(r)
        assert ints.elements == (0, 2, 4, 6, 7)
        assert scale == 2

    def test_integer_identity(self):
        r = RationalSet.from_fractions([Fraction(0), Fraction(3)])
        ints, scale = scale_to_integers(r)
        assert ints.elements == (0, 3)
        assert scale == 1

    def test_normalization_is_value_preserving(self):
        r = RationalSet(IntSet((0, 2, 4)), 2)
        assert r.denominator == 1
        assert r.numerators.elements == (0, 1, 2)
        assert r.elements() == (Fraction(0), Fraction(1), Fraction(2))

    def test_parse_with_shared_denominator(self):
        r = RationalSet.parse("0,1,5/2")
        assert r.denominator == 2
        assert r.numerators.elements == (0, 2, 5)

    def test_classification_invariant_under_scaling(self):
        r = RationalSet.parse("0,1/2,3/2,4")
        ints, _ = scale_to_integers(r)
        direct = IntSet((0, 1, 3, 8))
        assert classify(ints) is classify(direct)

    def test_rejects_bad_denominator(self):
        with pytest.raises(ValueError):
            RationalSet(IntSet((0, 1)), 0)


class TestSymmetryAndAP:
    def test_symmetric_examples(self):
        assert is_symmetric(IntSet((0, 1, 2, 10, 11, 12))) == 12
        assert is_symmetric(IntSet((0, 2, 3, 7, 11, 12, 14))) == 14
        assert is_symmetric(IntSet((0, 1, 3))) is None

    def test_detect_ap(self):
        assert detect_ap(IntSet((3, 7, 11))) == APSpec(3, 4, 3)
        assert detect_ap(IntSet((0, 5))) == APSpec(0, 5, 2)
        assert detect_ap(IntSet((0, 1, 3))) is None
        assert detect_ap(IntSet((5,))) == APSpec(5, 1, 1)


class TestApPlusTwo:
    def test_ap_with_two_extras(self):
        ap, extras = ap_plus_two_decomposition(IntSet((0, 1, 2, 3, 10, 20)))
        assert ap == APSpec(0, 1, 4)
        assert extras.elements == (10, 20)

    def test_minimal_set_has_no_split(self, a1_set):
        assert ap_plus_two_decomposition(a1_set) is None

    def test_pure_ap(self):
        ap, extras = ap_plus_two_decomposition(IntSet((0, 2, 4, 6)))
        assert ap == APSpec(0, 2, 4)
        assert extras.elements == ()

    def test_prefers_smallest_then_lex_extras(self):
        # any single removal of {0,1,3} leaves an AP; lex-smallest E wins
        ap, extras = ap_plus_two_decomposition(IntSet((0, 1, 3)))
        assert extras.elements == (0,)
        assert ap == APSpec(1, 2, 2)
