"""
Two lower bounds from one idea
==============================

Search exhaustively for the smallest balancing family at n = p = 3, then
certify its size with products of linear forms.  Afterwards run the same
degree argument over GF(5) on the interval family of twenty-element ground
set, where every ten-subset must meet some member in exactly five points.
"""

import time

import numpy as np

from pointgb.combinat import (
    RootVectorFamily,
    balancing_lower_certificate,
    brute_force_K,
    counting_inequality,
    galvin_construction,
    galvin_lower_certificate,
    subset_masks,
)

t0 = time.perf_counter()
rep = brute_force_K(3, 3, 6)
print(f"sizes ruled out: {rep.extra['refuted_sizes']}, smallest family: {rep.optimum}")
T = RootVectorFamily(3, 3, tuple(map(tuple, rep.witness)))
cert = balancing_lower_certificate(T)
for c in cert["per_class"]:
    print(f"  class {c['class']}: {c['size']} vectors, y = {c['y']}, bound {c['bound']}")
print("certified |T| >=", cert["certified_lower_bound"], f"({time.perf_counter() - t0:.1f}s)")

print(counting_inequality(5))

fam = galvin_construction(5)
# how balanced is the interval family? histogram of hits per ten-subset
Bs = subset_masks(20, 10)
hits = sum((np.bitwise_count(Bs & np.uint64(A)) == 5).astype(int) for A in fam.masks)
print("ten-subsets:", len(Bs), "min hits:", hits.min(), "histogram:", np.bincount(hits))

cert = galvin_lower_certificate(fam, 5)
for stage in cert["stages"]:
    print("  ", stage)
print("bounds on m(5):", cert["bounds"])
