#!/usr/bin/env python3
"""Render SVG graphs of iterates of the negative-base transformation.

Writes one SVG per (base, iterate) pair into an output directory; the number
of monotone segments in each picture equals the corresponding lap count.

Usage:
    python scripts/render_plots.py --outdir plots
    python scripts/render_plots.py --beta 5/2 --max-iterate 4 --outdir plots
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from negabeta.cli import main as cli_main


@dataclass
class GalleryConfig:
    bases: list[str] = field(default_factory=lambda: ["2", "5/2", "golden"])
    max_iterate: int = 3
    outdir: Path = Path("plots")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--beta", action="append", dest="bases",
                    help="base to render; repeatable")
    ap.add_argument("--max-iterate", type=int, default=3)
    ap.add_argument("--outdir", type=Path, default=Path("plots"))
    args = ap.parse_args()
    cfg = GalleryConfig(bases=args.bases or ["2", "5/2", "golden"],
                        max_iterate=args.max_iterate, outdir=args.outdir)

    cfg.outdir.mkdir(parents=True, exist_ok=True)
    for base in cfg.bases:
        for n in range(1, cfg.max_iterate + 1):
            slug = base.replace("/", "_")
            target = cfg.outdir / f"T{n}_base_{slug}.svg"
            code = cli_main(["plot", "--beta", base, "--iterate", str(n),
                             "--out", str(target)])
            if code != 0:
                raise SystemExit(f"plot failed for base {base}, n={n}")
            print(f"wrote {target}")


if __name__ == "__main__":
    main()
