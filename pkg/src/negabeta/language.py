"""Admissible words, factor complexity, classification, periodic points.

A word w is admissible when every suffix of w stays between the reference
bounds in the alternating order.  Two variants exist:

* ``ITO_SADAHIRO`` — the language of the natural shift: each suffix s
  satisfies  d <= s <= 0 d*   (both comparisons non-strict on the suffix's
  length; d is the expansion of the left endpoint, d* its corrected form).
* ``CORRECTED`` — the language of the corrected shift: each suffix s
  satisfies  d* <= s <= 0 d*.  The strictness of the upper bound only bites
  for infinite sequences; finite prefixes may tie.

The two variants coincide unless d is purely periodic with odd period.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from .errors import HorizonTooShort, UndecidedAtHorizon
from .expansion import reference_pair
from .numerics import BetaSpec
from .order import (EQUAL, GREATER, LESS, SymbolicSequence, Word,
                    alt_compare_seq, purely_periodic)
from .wordset import WordSet


class Variant(Enum):
    ITO_SADAHIRO = "ito_sadahiro"
    CORRECTED = "corrected"


_REFERENCE_CACHE: dict[tuple[BetaSpec, int], "Reference"] = {}

# the golden-ratio base expands its left endpoint to 1 0 0 0 ...
_GOLDEN_D = SymbolicSequence((1,), (0,))


@dataclass(frozen=True)
class Reference:
    """Reference data for one base: d, d*, and bound accessors."""

    beta: BetaSpec
    horizon: int
    d: SymbolicSequence
    d_star: SymbolicSequence

    @staticmethod
    def for_beta(beta: BetaSpec, horizon: int = 512) -> "Reference":
        key = (beta, horizon)
        ref = _REFERENCE_CACHE.get(key)
        if ref is None:
            d, d_star = reference_pair(beta, horizon)
            ref = Reference(beta, horizon, d, d_star)
            _REFERENCE_CACHE[key] = ref
        return ref

    @property
    def d1(self) -> int:
        return self.d.digit(1)

    def lower_seq(self, variant: Variant) -> SymbolicSequence:
        return self.d if variant is Variant.ITO_SADAHIRO else self.d_star

    def upper_seq(self) -> SymbolicSequence:
        """0 followed by d* (the supremum of the shift)."""
        return SymbolicSequence((0,) + self.d_star.prefix, self.d_star.period)

    def lower_digit(self, i: int, variant: Variant) -> int:
        seq = self.lower_seq(variant)
        try:
            return seq.digit(i)
        except UndecidedAtHorizon as e:
            raise HorizonTooShort(str(e)) from e

    def upper_digit(self, i: int) -> int:
        if i == 1:
            return 0
        try:
            return self.d_star.digit(i - 1)
        except UndecidedAtHorizon as e:
            raise HorizonTooShort(str(e)) from e


# ---------------------------------------------------------------------------
# incremental admissibility engine
#
# State: for each suffix start m of the word built so far, whether the suffix
# is still digit-for-digit tied with the lower and/or upper bound.  Suffixes
# strictly inside both bounds impose no further constraints and are dropped.
# ---------------------------------------------------------------------------

_State = list[tuple[int, bool, bool]]  # (start, tied_lower, tied_upper)


def _push_digit(states: _State, digit: int, pos: int,
                ref: Reference, variant: Variant) -> Optional[_State]:
    """Extend all tracked suffixes by one digit; None means inadmissible."""
    out: _State = []
    for start, tl, tu in states + [(pos, True, True)]:
        j = pos - start + 1  # index of the new digit inside this suffix
        if tl:
            c = ref.lower_digit(j, variant)
            if digit != c:
                s = digit - c if j % 2 == 0 else c - digit
                if s < 0:  # suffix fell below the lower bound
                    return None
                tl = False
        if tu:
            c = ref.upper_digit(j)
            if digit != c:
                s = digit - c if j % 2 == 0 else c - digit
                if s > 0:  # suffix rose above the upper bound
                    return None
                tu = False
        if tl or tu:
            out.append((start, tl, tu))
    return out


def is_admissible_word(w: Word, beta: BetaSpec,
                       variant: Variant = Variant.CORRECTED,
                       horizon: int = 512) -> bool:
    """Exact admissibility of a finite word."""
    ref = Reference.for_beta(beta, horizon)
    states: _State = []
    for pos, digit in enumerate(w, start=1):
        if not 0 <= digit <= ref.d1:
            return False
        nxt = _push_digit(states, digit, pos, ref, variant)
        if nxt is None:
            return False
        states = nxt
    return True


def enumerate_words(n: int, beta: BetaSpec,
                    variant: Variant = Variant.CORRECTED,
                    horizon: int = 512) -> WordSet:
    """All admissible words of length exactly n, lexicographically sorted."""
    ref = Reference.for_beta(beta, horizon)
    words: list[Word] = []
    alphabet = range(ref.d1 + 1)

    def rec(word: tuple[int, ...], states: _State) -> None:
        if len(word) == n:
            words.append(word)
            return
        pos = len(word) + 1
        for digit in alphabet:
            nxt = _push_digit(states, digit, pos, ref, variant)
            if nxt is not None:
                rec(word + (digit,), nxt)

    if n == 0:
        words.append(())
    else:
        rec((), [])
    return WordSet.from_words(words, complete_to=n)


def language_census(n: int, beta: BetaSpec,
                    variant: Variant = Variant.CORRECTED,
                    horizon: int = 512) -> list[int]:
    """Counts of admissible words of each length 1..n (one DFS pass)."""
    ref = Reference.for_beta(beta, horizon)
    counts = [0] * (n + 1)
    alphabet = range(ref.d1 + 1)

    def rec(length: int, states: _State) -> None:
        counts[length] += 1
        if length == n:
            return
        for digit in alphabet:
            nxt = _push_digit(states, digit, length + 1, ref, variant)
            if nxt is not None:
                rec(length + 1, nxt)

    rec(0, [])
    return counts[1:]


def factor_complexity(n: int, d_star: SymbolicSequence) -> list[int]:
    """H_1..H_n via H_m = 1 + sum_{k=1}^m (-1)^k (d*_{k-1} - d*_k) H_{m-k}.

    d*_0 = 0 by convention.  Needs d* known to depth n.
    """
    try:
        ds = [0] + [d_star.digit(i) for i in range(1, n + 1)]
    except UndecidedAtHorizon as e:
        raise HorizonTooShort(str(e)) from e
    h = [1]
    for m in range(1, n + 1):
        total = 1
        for k in range(1, m + 1):
            coeff = (ds[k - 1] - ds[k]) * (1 if k % 2 == 0 else -1)
            total += coeff * h[m - k]
        h.append(total)
    return h[1:]


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    beta_ge_golden: bool
    odd_period: Optional[int]      # length of the purely periodic odd period
    shift_coded: bool              # natural shift admits a coding
    corrected_shift_coded: bool
    transitive: bool               # topological transitivity of the shift
    witness: Optional[Word]        # word witnessing failure of transitivity


def classify(beta: BetaSpec, horizon: int = 512) -> Classification:
    """Coded / transitive status of the shifts attached to beta.

    The base is located against the golden ratio symbolically: d(l) of the
    golden base is 1 0 0 0 ..., and left endpoints expand monotonically
    (a smaller base has the alternately-larger expansion), so beta >= golden
    iff d <= 1 0^inf in the alternating order.
    """
    ref = Reference.for_beta(beta, horizon)
    cmp_golden = alt_compare_seq(ref.d, _GOLDEN_D, horizon=horizon)
    ge_golden = cmp_golden <= 0
    odd = len(ref.d.period) if (purely_periodic(ref.d)
                                and len(ref.d.period) % 2 == 1) else None
    corrected_coded = ge_golden
    shift_coded = ge_golden and odd is None
    transitive = shift_coded
    witness: Optional[Word] = None
    if odd is not None:
        # the word d_1 .. d_{p-1} j with j just below the last period digit
        # can never be re-attached to the period block
        p = ref.d.period
        witness = p[:-1] + (p[-1] - 1,)
    elif not ge_golden:
        # d starts 1 0^{2(i0-1)} 1 ...; the word 1 0^{2 i0 - 1} overshoots
        i0 = 1
        while ref.d.digit(2 * i0) != 1:
            i0 += 1
        witness = (1,) + (0,) * (2 * i0 - 1)
    return Classification(ge_golden, odd, shift_coded, corrected_coded,
                          transitive, witness)


class PeriodTarget(Enum):
    SHIFT = "shift"
    TRANSFORMATION = "transformation"


def count_periodic_points(n: int, beta: BetaSpec, target: PeriodTarget,
                          horizon: int = 512) -> int:
    """Number of period-n points (period dividing n).

    SHIFT counts length-n words all of whose cyclic shifts, repeated
    periodically, satisfy the natural-shift bounds (both non-strict).
    TRANSFORMATION counts fixed points of T^n, i.e. periodic digit streams
    that are genuine expansions: same lower bound, but the supremum 0 d* is
    excluded (strict upper comparison).  All comparisons are exact.
    """
    ref = Reference.for_beta(beta, horizon)
    lower = ref.d
    upper = ref.upper_seq()
    strict_upper = target is PeriodTarget.TRANSFORMATION
    count = 0
    for w in enumerate_words(n, beta, Variant.ITO_SADAHIRO, horizon).words:
        ok = True
        for m in range(n):
            rot = w[m:] + w[:m]
            seq = SymbolicSequence((), rot)
            try:
                if alt_compare_seq(lower, seq, horizon=horizon) > 0:
                    ok = False
                    break
                cu = alt_compare_seq(seq, upper, horizon=horizon)
            except UndecidedAtHorizon as e:
                raise HorizonTooShort(str(e)) from e
            if cu > 0 or (strict_upper and cu == 0):
                ok = False
                break
        if ok:
            count += 1
    return count
