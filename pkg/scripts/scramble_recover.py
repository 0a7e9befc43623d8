#!/usr/bin/env python3
"""Scramble catalog matrices with random signed row permutations and time the recovery."""

import argparse
import time

import numpy as np

from ewcodes import catalog
from ewcodes.exactmat import SignMatrix
from ewcodes.skewsearch import find_skew_equivalent, random_signed_permutation, verify_witness

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--names", nargs="+", default=["EW6", "EW14"])
ap.add_argument("--seeds", type=int, default=20)
args = ap.parse_args()

for name in args.names:
    H = catalog.resolve(name)
    times = []
    for seed in range(args.seeds):
        scramble = random_signed_permutation(H.n, np.random.default_rng(seed))
        M = SignMatrix(scramble.apply(H))
        t0 = time.perf_counter()
        found = find_skew_equivalent(M)
        times.append(time.perf_counter() - t0)
        assert found and verify_witness(M, *found[0])
    print(f"{name}: {args.seeds} recovered, mean {np.mean(times) * 1e3:.2f} ms, "
          f"max {np.max(times) * 1e3:.2f} ms")
