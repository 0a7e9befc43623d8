#!/usr/bin/env python3
"""Distance of every STAR code for a skew-EW matrix over a range of primes.

Usage: python scripts/star_survey.py EW14 --primes 3 5 23 [--all]
"""

import argparse

from ewcodes import catalog
from ewcodes.constructions import build_star, canonical, solve_star, star_distance_cap
from ewcodes.gfcode import min_distance

ap = argparse.ArgumentParser()
ap.add_argument("source")
ap.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7, 11, 13, 17, 19, 23])
ap.add_argument("--all", action="store_true", help="every solution, not just the canonical one")
args = ap.parse_args()

H = catalog.resolve(args.source)
print(f"n={H.n} cap={star_distance_cap(H.n)}")
for p in args.primes:
    sols = solve_star(H.n, p)
    if not sols:
        print(f"p={p}: no solutions")
        continue
    for s in (sols if args.all else [canonical(sols)]):
        r = min_distance(build_star(H, *s.coefficients(), p))
        print(f"p={p} coeffs={s} d={r.d} exact={r.exact} work={r.work_counter}")
