# A small error/variance/time table across strategies and trial counts.

import time

import numpy as np

from trisample import SAMPLER_KINDS, Graph, count_exact, estimate, variance_closed_form

rng = np.random.default_rng(1)
n = 120
iu, ju = np.triu_indices(n, k=1)
mask = rng.random(iu.size) < 0.15
g = Graph.from_edges(list(zip(iu[mask].tolist(), ju[mask].tolist())), n=n)
profile = count_exact(g)
truth = profile.total
print(f"G({n}, 0.15): m={g.m}, triangles={truth}\n")

reps = 20
print(f"{'strategy':14s} {'s':>7s} {'mean rel err':>13s} {'emp var':>12s} {'analytic var':>13s} {'ms':>8s}")
for kind in SAMPLER_KINDS:
    for s in (100, 1_000, 5_000):
        t0 = time.perf_counter()
        values = [estimate(g, kind, s, seed=rep, oracle=profile).value for rep in range(reps)]
        ms = (time.perf_counter() - t0) * 1000
        err = float(np.mean([abs(v - truth) / truth for v in values]))
        emp = float(np.var(values, ddof=1))
        ana = variance_closed_form(g, profile, kind, s)
        print(f"{kind:14s} {s:7d} {err:13.5f} {emp:12.2f} {ana:13.2f} {ms:8.1f}")
