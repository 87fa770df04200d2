#!/usr/bin/env python3
"""Closed-form verification battery.

Runs every closed-form operation instance against a menagerie of regular
base graphs over a weight grid, checking the predicted spectrum against
the numeric eigensolver (and the exact rational oracle where it applies).
Prints one line per (operation, base) with the worst deviation seen, and
exits 1 if anything lands outside tolerance.
"""

import argparse
import sys
from fractions import Fraction

from alphaenergy.closed_forms import verify_closed_form
from alphaenergy.graphs import complete, complete_bipartite, cycle, petersen
from alphaenergy.spectra import AlphaValue

OP_INSTANCES = ("middle", "central", "splitting:1", "splitting:2",
                "splitting:3", "closed-splitting", "closed-shadow", "ebd")

BASES = [("C%d" % n, cycle(n)) for n in range(3, 9)]
BASES += [("K%d" % n, complete(n)) for n in range(2, 7)]
BASES += [("K3,3", complete_bipartite(3, 3)), ("petersen", petersen())]


def alpha_grid(step: Fraction) -> list[AlphaValue]:
    grid, a = [], Fraction(0)
    while a < 1:
        grid.append(AlphaValue.from_fraction(a))
        a += step
    return grid


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tol", type=float, default=1e-8)
    ap.add_argument("--step", default="1/4", help="weight grid step (fraction)")
    args = ap.parse_args(argv)

    grid = alpha_grid(Fraction(args.step))
    failures = 0
    for op in OP_INSTANCES:
        for label, g in BASES:
            worst, exact_runs = 0.0, 0
            try:
                for a in grid:
                    rec = verify_closed_form(op, g, a, tol=args.tol, base_id=label)
                    worst = max(worst, rec.max_dev)
                    if rec.passed is False:
                        failures += 1
                    exact_runs += a.exact is not None
            except ValueError as e:
                print(f"{op:16s} {label:9s} skip ({e})")
                continue
            status = "ok" if worst <= args.tol else "FAIL"
            print(f"{op:16s} {label:9s} {status:4s} max dev {worst:.3e}"
                  f"  ({len(grid)} weights, {exact_runs} exact)")
    print(f"{failures} failure(s), tol {args.tol:g}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
