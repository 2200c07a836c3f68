#!/usr/bin/env python3
"""Survey a list of bases: expansion, classification, counting, support code.

Prints one block per base with the reference expansion, language census,
zeta coefficients, identity residuals, and — below the golden ratio — the
cascade level and gap intervals.

Usage:
    python scripts/survey.py                # built-in base list
    python scripts/survey.py --beta 7/3 --beta golden --order 10
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from negabeta.codes import kraft_partial_sums, support_code
from negabeta.errors import IndexOutOfRange
from negabeta.expansion import expand
from negabeta.gaps import all_gaps, cascade_classify
from negabeta.language import classify, language_census
from negabeta.numerics import (BetaSpec, beta_from_poly, beta_from_rational,
                               cross_compare, l_beta)
from negabeta.series import verify_identities, zeta_transformation

GOLDEN = ([-1, -1, 1], 1, 2)
PLASTIC = ([-1, -1, 0, 1], 1, 2)

DEFAULT_BASES = ["2", "5/2", "3", "golden", "plastic", "13/10", "3/2"]


@dataclass
class SurveyConfig:
    bases: list[str] = field(default_factory=lambda: list(DEFAULT_BASES))
    order: int = 8
    horizon: int = 2048
    digits_shown: int = 24


def parse_base(text: str) -> BetaSpec:
    if text == "golden":
        return beta_from_poly(*GOLDEN)
    if text == "plastic":
        return beta_from_poly(*PLASTIC)
    frac = Fraction(text)
    return beta_from_rational(frac.numerator, frac.denominator)


def fe_float(x) -> float:
    iv = x.enclosure(Fraction(1, 10**12))
    return float((iv.lo + iv.hi) / 2)


def survey_one(name: str, cfg: SurveyConfig) -> None:
    b = parse_base(name)
    print(f"=== base {name} ===")
    d = expand(l_beta(b), b, cfg.horizon).seq
    shown = "".join(str(x) for x in d.digits(cfg.digits_shown))
    tail = f" (purely periodic: {d.prefix == ()})" if d.is_periodic else " ..."
    print(f"  d(l) = {shown}{tail}")

    cls = classify(b, horizon=cfg.horizon)
    print(f"  shift coded: {cls.shift_coded}  "
          f"corrected coded: {cls.corrected_shift_coded}  "
          f"transitive: {cls.transitive}")

    census = language_census(cfg.order, b, horizon=cfg.horizon)
    print(f"  census n<={cfg.order}: {census}")

    z = zeta_transformation(b, cfg.order, horizon=cfg.horizon,
                            assume_nonperiodic=not d.is_periodic)
    print(f"  zeta coefficients: {z.as_ints()}")

    rep = verify_identities(b, order=cfg.order, horizon=cfg.horizon)
    bad = {k: v["residual"] for k, v in rep.items() if v["residual"] != 0}
    print(f"  identity residuals: {'all zero' if not bad else bad}")

    sc = support_code(b, max_len=12, horizon=cfg.horizon)
    sums = kraft_partial_sums(sc.family, b)
    last = fe_float(sums[-1]) if sums else 0.0
    lvl = f" level {sc.level}" if sc.level is not None else ""
    print(f"  support code: {sc.kind}{lvl}  "
          f"({len(sc.family.words)} words <= 12, Kraft ~ {last:.4f})")

    try:
        n = cascade_classify(b)
    except IndexOutOfRange:
        n = None
    if n is not None:
        gs = all_gaps(b)
        print(f"  cascade level {n}, {len(gs)} gap interval(s) found:")
        for g in gs:
            lo, hi = fe_float(g.left), fe_float(g.right)
            print(f"    k={g.k} i={g.i}: ({lo:.6f}, {hi:.6f})")
    print()


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--beta", action="append", dest="bases",
                    help="base to survey (rational p/q, 'golden', 'plastic');"
                         " repeatable")
    ap.add_argument("--order", type=int, default=8)
    ap.add_argument("--horizon", type=int, default=2048)
    args = ap.parse_args()
    cfg = SurveyConfig(bases=args.bases or list(DEFAULT_BASES),
                       order=args.order, horizon=args.horizon)
    for name in cfg.bases:
        survey_one(name, cfg)


if __name__ == "__main__":
    main()
