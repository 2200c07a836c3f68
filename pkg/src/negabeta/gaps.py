"""The cascade of bases below the golden ratio, and the gaps they open in
the support of the maximal-entropy measure.

The substitution psi(1) = 100, psi(0) = 1 generates word pairs
u_0 = 1, v_0 = 00, u_n = u_{n-1} v_{n-1}, v_n = u_{n-1} u_{n-1};
gamma_n is the largest root of X^l - X - 1 with l = max(|u_n|, |v_n|).
The gamma_n decrease strictly to 1 from gamma_0 (the golden ratio).  For a
base in [gamma_{n+1}, gamma_n) the expansion of the left endpoint parses
uniquely over {u_n, v_n}, and the support of the maximal-entropy measure
misses explicit orbit-bounded intervals A_{k,i}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import IndexOutOfRange, UndecidedAtHorizon
from .expansion import expand, l_beta, t_step
from .numerics import (BetaSpec, FieldElement, RationalInterval,
                       beta_from_poly, cross_compare, fe_compare)
from .order import SymbolicSequence, Word


@lru_cache(maxsize=None)
def morphism_words(n: int) -> tuple[Word, Word]:
    """(u_n, v_n).  u_{-1} is the single letter 0 by convention."""
    if n < -1:
        raise IndexOutOfRange("morphism words start at n = -1")
    if n == -1:
        return (0,), (0, 0)   # only u_{-1} is meaningful
    if n == 0:
        return (1,), (0, 0)
    u, v = morphism_words(n - 1)
    return u + v, u + u


def psi_fixed_point(length: int) -> Word:
    """Prefix of the fixed point psi^inf(1) = 100111001001..."""
    w = (1,)
    while len(w) < length:
        w = tuple(d for c in w for d in ((1, 0, 0) if c == 1 else (1,)))
    return w[:length]


@lru_cache(maxsize=None)
def gamma_n(n: int) -> BetaSpec:
    """The base gamma_n: largest root of X^l - X - 1, l = max(|u_n|,|v_n|)."""
    if n < 0:
        raise IndexOutOfRange("cascade levels start at 0")
    u, v = morphism_words(n)
    ell = max(len(u), len(v))
    coeffs = [-1, -1] + [0] * (ell - 2) + [1]
    return beta_from_poly(coeffs, Fraction(1), Fraction(2))


def cascade_classify(beta: BetaSpec, max_level: int = 64) -> int:
    """The level n with gamma_{n+1} < beta <= gamma_n, for beta in
    (1, gamma_0].  The right endpoint belongs to its own level: at
    beta = gamma_n the level-n family is the one whose Kraft sum reaches 1,
    so gamma_1 classifies as level 1, not level 0."""
    if cross_compare(beta, gamma_n(0)) >= 0:
        raise IndexOutOfRange("base is not below the golden ratio")
    for n in range(0, max_level):
        if cross_compare(beta, gamma_n(n + 1)) > 0:
            return n
        if cross_compare(beta, gamma_n(n + 1)) == 0:
            return n + 1
    raise IndexOutOfRange(f"base is below gamma_{max_level}")


@dataclass(frozen=True)
class Decomposition:
    level: int
    tokens: tuple[str, ...]     # "u"/"v" in parse order
    parsed_length: int          # digits consumed
    exhausted: bool             # ran out of certified digits (not a failure)


def decompose_expansion(beta: BetaSpec, horizon: int = 256) -> Decomposition:
    """Greedy parse of d(l_beta) over {u_n, v_n} at the cascade level of beta.

    u_n and v_n differ within min(|u_n|, |v_n|) letters, so the parse is
    deterministic.  Parsing stops cleanly when the remaining certified
    digits cannot disambiguate."""
    n = cascade_classify(beta)
    u, v = morphism_words(n)
    d = expand(l_beta(beta), beta, horizon).seq
    tokens: list[str] = []
    pos = 0  # 0-based count of consumed digits

    def digit(i: int) -> Optional[int]:
        try:
            return d.digit(i)
        except UndecidedAtHorizon:
            return None

    limit = horizon
    while pos < limit:
        matched = None
        for name, w in (("u", u), ("v", v)):
            ok = True
            for k, c in enumerate(w):
                g = digit(pos + k + 1)
                if g is None:
                    ok = None
                    break
                if g != c:
                    ok = False
                    break
            if ok:
                matched = (name, w)
                break
            if ok is None:
                return Decomposition(n, tuple(tokens), pos, True)
        if matched is None:
            raise ValueError(
                f"digits at position {pos + 1} parse over neither u_{n} nor v_{n}")
        tokens.append(matched[0])
        pos += len(matched[1])
    return Decomposition(n, tuple(tokens), pos, False)


@dataclass(frozen=True)
class GapInterval:
    k: int
    i: int
    left_index: int            # orbit index t of the left endpoint s_t
    right_index: int
    left: FieldElement
    right: FieldElement

    def enclosure(self, width: Fraction = Fraction(1, 10**6)
                  ) -> tuple[RationalInterval, RationalInterval]:
        return self.left.enclosure(width), self.right.enclosure(width)


def _orbit(beta: BetaSpec, upto: int) -> list[FieldElement]:
    pts = [l_beta(beta)]
    for _ in range(upto):
        _, nxt = t_step(pts[-1], beta)
        pts.append(nxt)
    return pts


def gap_levels(beta: BetaSpec) -> list[int]:
    """The valid k for gap_intervals: 0 .. n-1 at cascade level n >= 1, and
    just {0} at level 0 (the single gap [s_1, s_2))."""
    n = cascade_classify(beta)
    return list(range(max(n, 1)))


def gap_intervals(beta: BetaSpec, k: int, i: int) -> GapInterval:
    """The gap A_{k,i} = [s_{|u_k|+i}, s_{|u_k|+|u_{k-1}|+i}) (endpoints
    swapped for odd i), where s_t = T^t(l_beta).

    Requires k in gap_levels(beta) and 0 <= i < |u_{k-1}| (|u_{-1}| = 1)."""
    valid = gap_levels(beta)
    if k not in valid:
        raise IndexOutOfRange(f"k={k} outside valid levels {valid}")
    uk, _ = morphism_words(k)
    ukm1, _ = morphism_words(k - 1)
    if not 0 <= i < len(ukm1):
        raise IndexOutOfRange(f"i={i} outside [0, {len(ukm1)})")
    a = len(uk) + i
    b = len(uk) + len(ukm1) + i
    orbit = _orbit(beta, b)
    left_i, right_i = (a, b) if i % 2 == 0 else (b, a)
    left, right = orbit[left_i], orbit[right_i]
    assert fe_compare(left, right) < 0, "gap endpoints out of order"
    return GapInterval(k, i, left_i, right_i, left, right)


def all_gaps(beta: BetaSpec) -> list[GapInterval]:
    out = []
    for k in gap_levels(beta):
        ukm1, _ = morphism_words(k - 1)
        for i in range(len(ukm1)):
            out.append(gap_intervals(beta, k, i))
    return out


def gap_prefix_patterns(k: int) -> list[Word]:
    """Expansions of points inside a level-k gap start with
    sigma^i(u_{k-1}) u_{k-1} u_{k-1} or sigma^i(u_{k-1}) u_k u_k."""
    ukm1, _ = morphism_words(k - 1)
    uk, _ = morphism_words(k)
    pats = []
    for i in range(len(ukm1)):
        tail = ukm1[i:]
        pats.append(tail + ukm1 + ukm1)
        pats.append(tail + uk + uk)
    return pats


def forbidden_words(n: int) -> list[Word]:
    """Words forbidden in the support language at cascade level n:
    sigma^i(u_k) u_k u_k u_k and sigma^i(u_k) u_{k+1} u_{k+2} for
    -1 <= k < n and 0 <= i < |u_k| (u_{-1} = 0).

    These are forbidden in the support of the maximal-entropy measure (the
    sub-shift coded at level n), not in the full admissible language."""
    out: list[Word] = []
    for k in range(-1, n):
        uk = morphism_words(k)[0]
        uk1 = morphism_words(k + 1)[0]
        uk2 = morphism_words(k + 2)[0]
        for i in range(len(uk)):
            tail = uk[i:]
            out.append(tail + uk + uk + uk)
            out.append(tail + uk1 + uk2)
    seen = []
    for w in out:
        if w not in seen:
            seen.append(w)
    return seen
