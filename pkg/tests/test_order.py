"""Alternating lexicographic order on words and symbolic sequences."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from negabeta.errors import LengthMismatch, UndecidedAtHorizon
from negabeta.order import (EQUAL, GREATER, LESS, SymbolicSequence,
                            alt_compare, alt_compare_seq, format_digits,
                            parse_digits, parse_word, purely_periodic)

words = st.lists(st.integers(min_value=0, max_value=3),
                 min_size=1, max_size=12).map(tuple)


class TestAltCompare:
    def test_first_position_descends(self):
        # at position 1 the order is reversed: larger digit sorts lower
        assert alt_compare((2,), (1,)) == LESS
        assert alt_compare((0,), (1,)) == GREATER

    def test_second_position_ascends(self):
        assert alt_compare((1, 0), (1, 1)) == LESS
        assert alt_compare((1, 2), (1, 1)) == GREATER

    def test_equal(self):
        assert alt_compare((1, 0, 2), (1, 0, 2)) == EQUAL

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            alt_compare((1, 0), (1, 0, 2))

    @given(u=words, v=words)
    @settings(max_examples=150, deadline=None)
    def test_total_and_antisymmetric(self, u, v):
        if len(u) != len(v):
            with pytest.raises(LengthMismatch):
                alt_compare(u, v)
            return
        c = alt_compare(u, v)
        assert c in (LESS, EQUAL, GREATER)
        assert alt_compare(v, u) == -c
        assert (c == EQUAL) == (u == v)

    @given(u=words, v=words, w=words)
    @settings(max_examples=150, deadline=None)
    def test_transitive(self, u, v, w):
        n = min(len(u), len(v), len(w))
        u, v, w = u[:n], v[:n], w[:n]
        if alt_compare(u, v) <= 0 and alt_compare(v, w) <= 0:
            assert alt_compare(u, w) <= 0


class TestSymbolicSequence:
    def test_canonical_period(self):
        s = SymbolicSequence((2, 0), (1, 2, 1, 2))
        assert s.period == (1, 2)

    def test_preperiod_absorption(self):
        # 1 2 (1 2)^inf is purely periodic (1 2)^inf
        s = SymbolicSequence((1, 2), (1, 2))
        assert s.prefix == () and s.period == (1, 2)
        assert purely_periodic(s)

    def test_rotation_absorption(self):
        # 2 (1 2)^inf = (2 1)^inf
        s = SymbolicSequence((2,), (1, 2))
        assert s.prefix == () and s.period == (2, 1)

    def test_digit_one_based(self):
        s = SymbolicSequence((3,), (0, 1))
        assert [s.digit(i) for i in range(1, 6)] == [3, 0, 1, 0, 1]

    def test_truncated_raises_past_horizon(self):
        s = SymbolicSequence((1, 0, 0), None)
        assert s.digit(3) == 0
        with pytest.raises(UndecidedAtHorizon):
            s.digit(4)

    def test_shift(self):
        s = SymbolicSequence((3, 2), (1, 0))
        assert s.shift(1).prefix == (2,) and s.shift(1).period == (1, 0)
        assert s.shift(3).period == (0, 1)


class TestAltCompareSeq:
    def test_periodic_equality_certified(self):
        a = SymbolicSequence((1, 0), (2, 1))
        b = SymbolicSequence((1, 0, 2, 1), (2, 1))
        assert alt_compare_seq(a, b) == EQUAL

    def test_periodic_strict(self):
        a = SymbolicSequence((), (1, 0))
        b = SymbolicSequence((), (1, 1))
        # first difference at position 2 (even): ascending there
        assert alt_compare_seq(a, b) == LESS

    def test_truncated_undecided(self):
        a = SymbolicSequence((1, 0, 0), None)
        b = SymbolicSequence((), (1, 0, 0))
        with pytest.raises(UndecidedAtHorizon):
            alt_compare_seq(a, b, horizon=64)

    def test_truncated_decided_early(self):
        a = SymbolicSequence((2, 0, 0), None)
        b = SymbolicSequence((), (1, 0, 0))
        assert alt_compare_seq(a, b, horizon=64) == LESS


class TestParsing:
    def test_parse_periodic(self):
        s = parse_digits("2012(1)")
        assert s.prefix == (2, 0, 1, 2) and s.period == (1,)

    def test_parse_comma(self):
        assert parse_word("2,10,0") == (2, 10, 0)

    def test_roundtrip(self):
        s = parse_digits("100(11)")
        assert parse_digits(format_digits(s.prefix, s.period)) == s

    @given(pre=st.lists(st.integers(0, 9), max_size=6).map(tuple),
           per=st.lists(st.integers(0, 9), min_size=1, max_size=4).map(tuple))
    @settings(max_examples=100, deadline=None)
    def test_roundtrip_random(self, pre, per):
        s = SymbolicSequence(pre, per)
        assert parse_digits(format_digits(s.prefix, s.period)) == s
