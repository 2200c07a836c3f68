"""Truncated formal power series with exact rational coefficients, plus the
generating functions of the dynamics: lap counting and the two zeta
functions (transformation and shift).

A series of order N stores coefficients of z^0 .. z^N exactly.  Identity
checks between constructions are coefficient-wise and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (HorizonTooShort, NonIntegerCoefficient,
                     NonUnitConstantTerm, UndecidedAtHorizon)
from .numerics import BetaSpec
from .order import SymbolicSequence, purely_periodic


@dataclass(frozen=True)
class IntSeries:
    """Truncated power series sum_{n<=order} c_n z^n over Q."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs",
                           tuple(Fraction(c) for c in self.coeffs))

    @staticmethod
    def from_ints(cs: Sequence, order: int | None = None) -> "IntSeries":
        cs = tuple(Fraction(c) for c in cs)
        if order is not None:
            cs = cs[:order + 1] + (Fraction(0),) * (order + 1 - len(cs))
        return IntSeries(cs)

    @staticmethod
    def zero(order: int) -> "IntSeries":
        return IntSeries((Fraction(0),) * (order + 1))

    @staticmethod
    def one(order: int) -> "IntSeries":
        return IntSeries((Fraction(1),) + (Fraction(0),) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def truncate(self, order: int) -> "IntSeries":
        return IntSeries.from_ints(self.coeffs, order)

    def _align(self, other) -> tuple["IntSeries", "IntSeries"]:
        if not isinstance(other, IntSeries):
            other = IntSeries.from_ints([other], self.order)
        n = min(self.order, other.order)
        return self.truncate(n), other.truncate(n)

    def __add__(self, other):
        a, b = self._align(other)
        return IntSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return IntSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        a, b = self._align(other)
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._align(other)
        return b - a

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return IntSeries(tuple(c * other for c in self.coeffs))
        a, b = self._align(other)
        n = a.order
        out = [Fraction(0)] * (n + 1)
        for i, ca in enumerate(a.coeffs):
            if ca:
                for j in range(0, n - i + 1):
                    out[i + j] += ca * b.coeffs[j]
        return IntSeries(tuple(out))

    __rmul__ = __mul__

    def reciprocal(self) -> "IntSeries":
        if self.coeffs[0] == 0:
            raise NonUnitConstantTerm("reciprocal needs nonzero constant term")
        n = self.order
        inv0 = Fraction(1) / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * n
        for m in range(1, n + 1):
            s = Fraction(0)
            for k in range(1, m + 1):
                s += self.coeffs[k] * out[m - k] if k <= n else 0
            out[m] = -inv0 * s
        return IntSeries(tuple(out))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        a, b = self._align(other)
        return a * b.reciprocal()

    def log(self) -> "IntSeries":
        if self.coeffs[0] != 1:
            raise NonUnitConstantTerm("log needs constant term 1")
        n = self.order
        g = [Fraction(0)] * (n + 1)
        for m in range(1, n + 1):
            s = Fraction(0)
            for k in range(1, m):
                s += k * g[k] * self.coeffs[m - k]
            g[m] = self.coeffs[m] - s / m
        return IntSeries(tuple(g))

    def exp(self) -> "IntSeries":
        if self.coeffs[0] != 0:
            raise ValueError("exp needs zero constant term")
        n = self.order
        f = [Fraction(1)] + [Fraction(0)] * n
        for m in range(1, n + 1):
            s = Fraction(0)
            for k in range(1, m + 1):
                s += k * self.coeffs[k] * f[m - k]
            f[m] = s / m
        return IntSeries(tuple(f))

    def derivative_log_counts(self) -> list[Fraction]:
        """Coefficients of z f'/f, n = 1..order (orbit-count extraction)."""
        lg = self.log()
        return [n * lg.coeffs[n] for n in range(1, self.order + 1)]

    def as_ints(self) -> list[int]:
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise NonIntegerCoefficient(f"coefficient {c} is not an integer")
            out.append(c.numerator)
        return out

    def max_abs_diff(self, other: "IntSeries") -> Fraction:
        a, b = self._align(other)
        return max((abs(x - y) for x, y in zip(a.coeffs, b.coeffs)),
                   default=Fraction(0))


def geometric(order: int) -> IntSeries:
    """1/(1-z)."""
    return IntSeries((Fraction(1),) * (order + 1))


def one_minus_z_pow(k: int, order: int) -> IntSeries:
    cs = [Fraction(0)] * (order + 1)
    cs[0] = Fraction(1)
    if k <= order:
        cs[k] = Fraction(-1)
    return IntSeries(tuple(cs))


def census_gf(census: dict[int, int], order: int) -> IntSeries:
    cs = [Fraction(0)] * (order + 1)
    for n, b in census.items():
        if n <= order:
            cs[n] = Fraction(b)
    return IntSeries(tuple(cs))


# ---------------------------------------------------------------------------
# dynamics series
# ---------------------------------------------------------------------------

def _stream_digits(seq: SymbolicSequence, n: int) -> list[int]:
    try:
        return [seq.digit(i) for i in range(1, n + 1)]
    except UndecidedAtHorizon as e:
        raise HorizonTooShort(str(e)) from e


def denominator_series(d_star: SymbolicSequence, order: int) -> IntSeries:
    """1 - sum_n (-1)^n (d*_{n-1} - d*_n) z^n   (with d*_0 = 0)."""
    ds = [0] + _stream_digits(d_star, order)
    cs = [Fraction(1)] + [Fraction(0)] * order
    for n in range(1, order + 1):
        diff = ds[n - 1] - ds[n]
        cs[n] = -Fraction(diff if n % 2 == 0 else -diff)
    return IntSeries(tuple(cs))


def lap_series(beta: BetaSpec, order: int, horizon: int = 512) -> IntSeries:
    """L(z) = 1 / ((1-z) (1 - sum (-1)^n (d*_{n-1}-d*_n) z^n)).

    L_n is the number of laps (monotonicity intervals) of T^n, and equals
    the number of admissible words of length n in the corrected language.
    """
    from .language import Reference
    ref = Reference.for_beta(beta, horizon)
    den = denominator_series(ref.d_star, order)
    return (one_minus_z_pow(1, order) * den).reciprocal()


def zeta_transformation(beta: BetaSpec, order: int, horizon: int = 512,
                        assume_nonperiodic: bool = False) -> IntSeries:
    """Dynamical zeta of T.

    (1+z) / (1 - sum (-1)^n (d_{n-1}-d_n) z^n)  for non purely periodic d;
    (1+z) / ((1-z^k)(1 - sum (-1)^n (d*_{n-1}-d*_n) z^n))  for d purely
    periodic with (minimal) period k.  A truncated d is accepted only with
    assume_nonperiodic=True.
    """
    from .expansion import corrected
    from .language import Reference
    ref = Reference.for_beta(beta, horizon)
    d = ref.d
    if not d.is_periodic and not assume_nonperiodic:
        raise HorizonTooShort(
            "tail of d unknown at this horizon; pass assume_nonperiodic=True "
            "to treat it as aperiodic")
    numer = IntSeries.from_ints([1, 1], order)
    if purely_periodic(d):
        k = len(d.period)
        den = one_minus_z_pow(k, order) * denominator_series(corrected(d), order)
        return numer * den.reciprocal()
    return numer * denominator_series(d, order).reciprocal()


def zeta_shift(beta: BetaSpec, order: int, horizon: int = 512,
               assume_nonperiodic: bool = False) -> IntSeries:
    """Zeta of the natural shift: equals the transformation zeta except for
    a purely periodic d of odd period p, where the supremum orbit adds a
    cyclic class of length p+1: zeta_shift = zeta / (1 - z^{p+1})."""
    from .language import Reference
    ref = Reference.for_beta(beta, horizon)
    z = zeta_transformation(beta, order, horizon, assume_nonperiodic)
    d = ref.d
    if purely_periodic(d) and len(d.period) % 2 == 1:
        p = len(d.period)
        return z * one_minus_z_pow(p + 1, order).reciprocal()
    return z


def zeta_from_counts(counts: Sequence[int]) -> IntSeries:
    """exp(sum p_n z^n / n) from periodic-point counts p_1..p_N.

    The result must have integer coefficients; a failure raises."""
    order = len(counts)
    cs = [Fraction(0)] + [Fraction(c, n) for n, c in enumerate(counts, start=1)]
    out = IntSeries(tuple(cs)).exp()
    out.as_ints()
    return out


# ---------------------------------------------------------------------------
# identity verification
# ---------------------------------------------------------------------------

def verify_identities(beta: BetaSpec, order: int = 10, horizon: int = 512,
                      variant_census: bool = True) -> dict[str, dict]:
    """Exact coefficient-wise residuals of the structural identities.

    * factorization:  1 - sum (-1)^n (d*_{n-1}-d*_n) z^n
                      = (1+z)(1 - C(z))(1 - A(z)) prod_i (1 - P_i(z))
      with C, A, P_i the census generating functions of the code C,
      Delta_odd and Delta^(i) families;
    * census:         the same product times the enumerated-language
                      generating function equals 1/(1-z);
    * lap_census:     lap numbers equal the corrected-language census;
    * zeta_vs_lap:    zeta = (1-z^2) L, with an extra (1-z^k) on zeta's side
                      when d is purely periodic of period k;
    * shift_census (only for odd-periodic d):
                      sum H~_n z^n = (1-z^{2p}) / ((1-z)(1 - sum (-1)^n
                      (d_{n-1}-d_n) z^n)) for odd period 2p-1, H~ the
                      natural-shift census.

    Returns {name: {"order": N, "residual": Fraction}}.
    """
    from .codes import (build_delta_i, build_delta_odd, code_C_from_stream,
                        delta_i_indices, working_stream)
    from .language import Reference, Variant, language_census
    ref = Reference.for_beta(beta, horizon)
    stream = working_stream(ref.d)
    report: dict[str, dict] = {}

    golden_or_below = _cmp_golden(ref, horizon) >= 0
    if golden_or_below:
        c_gf = census_gf({1: 1}, order)  # C = {0}
    else:
        c_gf = census_gf(code_C_from_stream(stream, order).census, order)
    a_gf = census_gf(build_delta_odd(stream, order).census, order)
    prod = (IntSeries.one(order) - c_gf) * (IntSeries.one(order) - a_gf)
    prod = prod * IntSeries.from_ints([1, 1], order)
    for i in delta_i_indices(stream, order):
        p_gf = census_gf(build_delta_i(stream, i, order).census, order)
        prod = prod * (IntSeries.one(order) - p_gf)

    den_star = denominator_series(ref.d_star, order)
    report["factorization"] = {
        "order": order,
        "residual": den_star.max_abs_diff(prod),
    }

    lap = lap_series(beta, order, horizon)
    if variant_census:
        h = language_census(order, beta, Variant.CORRECTED, horizon)
        h_gf = IntSeries.from_ints([1] + h, order)
        report["census"] = {
            "order": order,
            "residual": (prod * h_gf).max_abs_diff(geometric(order)),
        }
        report["lap_census"] = {
            "order": order,
            "residual": h_gf.max_abs_diff(lap),
        }

    zeta = zeta_transformation(beta, order, horizon,
                               assume_nonperiodic=not ref.d.is_periodic)
    lhs = zeta
    if purely_periodic(ref.d):
        lhs = zeta * one_minus_z_pow(len(ref.d.period), order)
    rhs = one_minus_z_pow(2, order) * lap
    report["zeta_vs_lap"] = {"order": order, "residual": lhs.max_abs_diff(rhs)}

    if purely_periodic(ref.d) and len(ref.d.period) % 2 == 1 and variant_census:
        two_p = len(ref.d.period) + 1
        h_is = language_census(order, beta, Variant.ITO_SADAHIRO, horizon)
        h_is_gf = IntSeries.from_ints([1] + h_is, order)
        rhs = (one_minus_z_pow(two_p, order) * geometric(order)
               * denominator_series(ref.d, order).reciprocal())
        report["shift_census"] = {
            "order": order,
            "residual": h_is_gf.max_abs_diff(rhs),
        }
    return report


def _cmp_golden(ref, horizon: int) -> int:
    from .order import alt_compare_seq
    return alt_compare_seq(ref.d, SymbolicSequence((1,), (0,)), horizon=horizon)
