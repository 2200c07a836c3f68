"""Cascade of bases below the golden ratio, gap intervals, forbidden words."""

from fractions import Fraction as F

import pytest

from negabeta.errors import IndexOutOfRange
from negabeta.expansion import expand
from negabeta.gaps import (all_gaps, cascade_classify, decompose_expansion,
                           forbidden_words, gamma_n, gap_prefix_patterns,
                           morphism_words, psi_fixed_point)
from negabeta.numerics import (beta_from_rational, cross_compare, fe_compare,
                               from_rational, l_beta)

PSI_43 = "1001110010010011100111001110010010011100100"


class TestMorphism:
    def test_fixed_point_prefix(self):
        assert "".join(map(str, psi_fixed_point(43))) == PSI_43

    def test_words(self):
        u0, v0 = morphism_words(0)
        assert (u0, v0) == ((1,), (0, 0))
        u1, v1 = morphism_words(1)
        assert (u1, v1) == ((1, 0, 0), (1, 1))
        u2, v2 = morphism_words(2)
        assert "".join(map(str, u2)) == "10011"
        assert "".join(map(str, v2)) == "100100"

    def test_recursion(self):
        for n in range(1, 6):
            u, v = morphism_words(n)
            up, vp = morphism_words(n - 1)
            assert u == up + vp
            assert v == up + up


class TestCascade:
    def test_gamma0_is_golden(self, beta_golden):
        assert cross_compare(gamma_n(0), beta_golden) == 0

    def test_gamma1_expansion(self, beta_plastic):
        # d(l) = 1 0 0 followed by repeating 1  (equivalently 100 (11)^inf)
        d = expand(l_beta(beta_plastic), beta_plastic).seq
        assert (d.prefix, d.period) == ((1, 0, 0), (1,))
        assert cross_compare(gamma_n(1), beta_plastic) == 0

    def test_cascade_decreasing(self):
        for n in range(4):
            assert cross_compare(gamma_n(n + 1), gamma_n(n)) < 0

    def test_classify(self, beta_plastic):
        assert cascade_classify(beta_from_rational(3, 2)) == 0
        assert cascade_classify(beta_from_rational(13, 10)) == 1
        # boundary bases belong to their own level
        assert cascade_classify(beta_plastic) == 1

    def test_classify_rejects_large(self, beta_golden):
        with pytest.raises(IndexOutOfRange):
            cascade_classify(beta_from_rational(2, 1))
        with pytest.raises(IndexOutOfRange):
            cascade_classify(beta_golden)


class TestDecomposition:
    def test_thirteen_tenths_parses_over_level_one(self):
        dec = decompose_expansion(beta_from_rational(13, 10))
        assert dec.level == 1
        u, v = morphism_words(1)
        assert (u, v) == ((1, 0, 0), (1, 1))
        assert dec.tokens[0] == "u"
        assert dec.parsed_length > 50

    def test_three_halves_parses_over_level_zero(self):
        dec = decompose_expansion(beta_from_rational(3, 2))
        assert dec.level == 0
        assert dec.tokens[:3] == ("u", "v", "v")


class TestGapIntervals:
    def test_nonempty_and_ordered(self):
        for b in (beta_from_rational(13, 10), beta_from_rational(3, 2)):
            gs = all_gaps(b)
            assert gs
            for g in gs:
                assert fe_compare(g.left, g.right) < 0

    def test_midpoint_expansion_hits_gap_pattern(self):
        b = beta_from_rational(13, 10)
        for g in all_gaps(b):
            le, re_ = g.enclosure(F(1, 10**9))
            mid = (le.hi + re_.lo) / 2
            d = expand(from_rational(b, mid), b, 64).seq.digits(30)
            pats = gap_prefix_patterns(g.k)
            assert any(d[:len(p)] == p for p in pats), (g.k, g.i, d[:12])


class TestForbiddenWords:
    def test_shapes(self):
        words = forbidden_words(1)
        u0, _ = morphism_words(0)
        # contains u0^4 = 1111 and u0 u1 u2
        assert (1, 1, 1, 1) in words
        u1, _ = morphism_words(1)
        u2, _ = morphism_words(2)
        assert u0 + u1 + u2 in words

    def test_gap_points_contain_forbidden_factor(self):
        # the expansion of a point inside a gap exhibits a forbidden word
        b = beta_from_rational(13, 10)
        words = ["".join(map(str, w)) for w in forbidden_words(1)]
        for g in all_gaps(b):
            le, re_ = g.enclosure(F(1, 10**9))
            mid = (le.hi + re_.lo) / 2
            d = expand(from_rational(b, mid), b, 64).seq
            text = "".join(str(d.digit(i)) for i in range(1, 40))
            assert any(w in text for w in words), text
