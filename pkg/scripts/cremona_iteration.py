#!/usr/bin/env python3
"""Iterate the H-constant transformation law h -> s/(s+3) h.

Each generic-base-point transformation keeps the strict-transform
self-intersection and adds three blown-up points, so the trajectory
telescopes to h0 * s0/(s0 + 3n) while the member degree doubles each
step.  The default run starts from the Klein line configuration values.
"""

import argparse
import sys
from fractions import Fraction

from harbourne.cremona import iterate_law
from harbourne.hconst import format_decimal


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--h0", type=Fraction, default=Fraction(-3))
    parser.add_argument("--s0", type=int, default=49)
    parser.add_argument("--steps", type=int, default=8)
    args = parser.parse_args(argv)

    steps = iterate_law(args.h0, args.s0, args.steps)
    print(f"{'step':>4}  {'s':>6}  {'degree x':>8}  {'h':>16}  {'decimal':>9}")
    for idx, step in enumerate(steps):
        print(
            f"{idx:>4}  {step.s:>6}  {step.degree_multiplier:>8}  "
            f"{str(step.h):>16}  {format_decimal(step.h, 4):>9}"
        )
    final = steps[-1]
    telescoped = args.h0 * Fraction(args.s0, args.s0 + 3 * args.steps)
    assert final.h == telescoped
    print(f"\ntelescoped closed form h0*s0/(s0+3n) = {telescoped} confirmed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
