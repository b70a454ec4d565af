#!/usr/bin/env python3
"""Desk-scale agreement sweep with timings.

For each (p, n) on the grid, computes the orbit count by BFS sweep,
canonical-form counting, fixed-point averaging, and the closed form, and
reports how long each route took.  Exits nonzero on any disagreement.
"""

import argparse
import sys
import time

from orbitlab.formulas import r_formula
from orbitlab.orbits import (
    count_orbits_bfs,
    count_orbits_burnside,
    count_orbits_canonical,
)
from orbitlab.residues import GroupSpec

DEFAULT_GRID = [(2, 8), (3, 4), (5, 3), (7, 2)]


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p2-max", type=int, default=8,
                        help="largest n for p = 2 (default 8)")
    args = parser.parse_args()

    grid = [(2, args.p2_max)] + DEFAULT_GRID[1:]
    mismatches = 0
    print(f"{'p':>3} {'n':>3} {'states':>10} {'count':>12} "
          f"{'bfs[s]':>8} {'canon[s]':>9} {'burn[s]':>8}")
    for p, n_max in grid:
        for n in range(n_max + 1):
            spec = GroupSpec.uniform(p, n)
            bfs, t_bfs = timed(lambda: count_orbits_bfs(spec).orbit_count)
            canon, t_canon = timed(lambda: count_orbits_canonical(spec).orbit_count)
            burn, t_burn = timed(lambda: count_orbits_burnside(spec).orbit_count)
            formula = r_formula(p, n)
            ok = bfs == canon == burn == formula
            if not ok:
                mismatches += 1
            print(f"{p:>3} {n:>3} {spec.state_count:>10} {bfs:>12} "
                  f"{t_bfs:>8.3f} {t_canon:>9.3f} {t_burn:>8.3f}"
                  + ("" if ok else f"  MISMATCH canon={canon} burn={burn} formula={formula}"))
    if mismatches:
        print(f"{mismatches} mismatching cells", file=sys.stderr)
        return 1
    print("all methods agree with the closed form")
    return 0


if __name__ == "__main__":
    sys.exit(main())
