"""Digit expansions in base -beta.

The transformation T(x) = -beta*x - floor(-beta*x + beta/(beta+1)) acts on
the fundamental interval I = [-beta/(beta+1), 1/(beta+1)).  Every point of I
gets the digit stream x_i = floor(-beta * T^{i-1}(x) + beta/(beta+1)); a
point outside I is first rescaled by the smallest power of -beta that brings
it inside, which contributes the "integer part" digits.  Orbits are tracked
with exact field arithmetic, so eventual periodicity is detected by exact
equality of orbit points, never by digit-pattern heuristics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAnExpansionTail
from .numerics import (BetaSpec, FieldElement, RationalInterval, beta_element,
                       fe_compare, fe_floor, from_rational, l_beta, one,
                       r_beta, zero)
from .order import SymbolicSequence, purely_periodic


@dataclass(frozen=True)
class Expansion:
    """Digit data of a point: x = sum_i seq.digit(i) * (-beta)^(int_len - i).

    `int_len` is the number of leading digits that sit left of the radix
    point (the smallest n with x/(-beta)^n in the fundamental interval).
    """

    beta: BetaSpec
    int_len: int
    seq: SymbolicSequence


def in_interval(x: FieldElement, beta: BetaSpec) -> bool:
    """Is x in I = [l_beta, r_beta)?"""
    return fe_compare(x, l_beta(beta)) >= 0 and fe_compare(x, r_beta(beta)) < 0


def t_step(x: FieldElement, beta: BetaSpec) -> tuple[int, FieldElement]:
    """One application of T: returns (digit, T(x))."""
    b = beta_element(beta)
    y = -(b * x)
    digit = fe_floor(y - l_beta(beta))
    return digit, y - digit


def expand(x, beta: BetaSpec, max_digits: int = 512) -> Expansion:
    """Expansion of x (FieldElement or rational) in base -beta.

    Emits at most `max_digits` fractional digits; the tail becomes periodic
    as soon as an orbit point repeats exactly, otherwise it is truncated.
    """
    if not isinstance(x, FieldElement):
        x = from_rational(beta, Fraction(x))
    neg_beta_inv = (-beta_element(beta)).inverse()
    int_len = 0
    while not in_interval(x, beta):
        x = x * neg_beta_inv
        int_len += 1
    digits: list[int] = []
    seen: dict[FieldElement, int] = {}
    point = x
    while len(digits) < max(max_digits, int_len):
        if point in seen:
            j = seen[point]
            return Expansion(beta, int_len,
                             SymbolicSequence(tuple(digits[:j]), tuple(digits[j:])))
        seen[point] = len(digits)
        d, point = t_step(point, beta)
        digits.append(d)
    return Expansion(beta, int_len, SymbolicSequence(tuple(digits), None))


def corrected(seq: SymbolicSequence) -> SymbolicSequence:
    """The corrected digit stream d*.

    A purely periodic stream of odd period (d_1 ... d_{2n-1}) repeats as
    (d_1, ..., d_{2n-2}, d_{2n-1} - 1, 0); every other stream is its own
    corrected form.  (Truncated input is returned unchanged: within the
    known horizon it cannot be certified purely periodic.)
    """
    if purely_periodic(seq) and len(seq.period) % 2 == 1:
        p = seq.period
        if p[-1] == 0:
            raise NotAnExpansionTail(
                "purely periodic expansion cannot end its period with 0")
        return SymbolicSequence((), p[:-1] + (p[-1] - 1, 0))
    return seq


def evaluate_exact(e: Expansion) -> FieldElement:
    """Exact value of a periodic expansion as a field element."""
    if not e.seq.is_periodic:
        raise NotAnExpansionTail("exact evaluation needs a periodic tail")
    beta = e.beta
    t = (-beta_element(beta)).inverse()     # 1/(-beta)
    pre, per = e.seq.prefix, e.seq.period
    acc = zero(beta)
    tp = one(beta)
    for d in pre:
        tp = tp * t
        acc = acc + d * tp
    # tail: t^{|pre|} * (sum_k per[k] t^{k+1}) / (1 - t^{|per|})
    block = zero(beta)
    tq = one(beta)
    for d in per:
        tq = tq * t
        block = block + d * tq
    acc = acc + tp * block / (one(beta) - t ** len(per))
    return acc * (-beta_element(beta)) ** e.int_len


def evaluate(e: Expansion, width: Fraction = Fraction(1, 10**9)) -> RationalInterval:
    """Enclosure of the value of an expansion, to the requested width.

    Periodic tails evaluate exactly (possibly a zero-width interval);
    truncated tails contribute a rigorous remainder bound d1 * sum_{i>n}
    beta^-i on top of the known digits.
    """
    beta = e.beta
    if e.seq.is_periodic:
        v = evaluate_exact(e)
        if v.is_rational():
            q = v.as_rational()
            return RationalInterval(q, q)
        return v.enclosure(width)
    t = (-beta_element(beta)).inverse()
    acc = zero(beta)
    tp = one(beta)
    for d in e.seq.prefix:
        tp = tp * t
        acc = acc + d * tp
    acc = acc * (-beta_element(beta)) ** e.int_len
    n = len(e.seq.prefix) - e.int_len
    # |value - acc| <= d1 * beta^-n / (beta - 1)
    iv_b = beta.refine_below(Fraction(1, 1024)) if beta.kind == "algebraic" else beta.interval()
    blo = iv_b.lo
    rem = beta.d1 * Fraction(1, 1) / (blo ** n * (blo - 1)) if blo > 1 else None
    if rem is None:
        raise ValueError("base interval not separated from 1")
    core = acc.enclosure(width / 2) if not acc.is_rational() else \
        RationalInterval(acc.as_rational(), acc.as_rational())
    return RationalInterval(core.lo - rem, core.hi + rem)


def reference_pair(beta: BetaSpec, max_digits: int = 512
                   ) -> tuple[SymbolicSequence, SymbolicSequence]:
    """(d, d*): the expansion of the left endpoint and its corrected form."""
    e = expand(l_beta(beta), beta, max_digits)
    assert e.int_len == 0
    return e.seq, corrected(e.seq)
