# Planning the trial count for a relative-error target.
#
# If every per-edge local count is below some bound ub, and avg = T/m is
# the mean local count, then s = ceil(2 c (ub/avg) ln(n) / eps^2) trials
# keep the relative error below eps except with probability n^-c.

import numpy as np

from trisample import Graph, chernoff_sample_size, count_exact, estimate

rng = np.random.default_rng(0)
n = 300
iu, ju = np.triu_indices(n, k=1)
mask = rng.random(iu.size) < 0.1
g = Graph.from_edges(list(zip(iu[mask].tolist(), ju[mask].tolist())), n=n)

profile = count_exact(g)
truth = profile.total
upper = profile.max_per_edge
average = truth / g.m
print(f"G({n}, 0.1): m={g.m}, triangles={truth}")
print(f"per-edge bound={upper}, average={average:.2f}, ratio={upper / average:.1f}")

epsilon, c = 0.1, 1.0
s = chernoff_sample_size(epsilon, c, n, upper, average)
print(f"planned trials for eps={epsilon}, c={c}: s={s}")

# The plan is conservative; check how it does over 30 repetitions.
errors = []
for rep in range(30):
    value = estimate(g, "edge-degree", s, seed=rep, oracle=profile).value
    errors.append(abs(value - truth) / truth)
print(f"worst relative error over 30 runs: {max(errors):.4f} (target {epsilon})")
