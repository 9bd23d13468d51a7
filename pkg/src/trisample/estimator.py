"""Monte Carlo triangle estimation: average of importance-weighted trials.

A trial drawn as (i, j) with probabilities (p_i, q_{j|i}) is worth

    beta_t = T_{ij} / (6 p_i q_{j|i})

where T_{ij} is the number of triangles through {i, j}.  The estimate is
the mean of ``s`` independent trials; it is unbiased for the triangle
count under every built-in strategy.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exact import TriangleProfile, count_exact, local_edge_count
from .graph import Graph
from .rng import seed_streams
from .samplers import OPTIMAL, SamplerSpec, TrialDraw, build_sampler, draw


def beta_value(local_count: int, p_i: float, q_j_given_i: float) -> float:
    """Single-trial value T_{ij} / (6 p q); shared by every estimation path."""
    if local_count == 0:
        return 0.0
    denom = 6.0 * p_i * q_j_given_i
    if denom <= 0.0:
        raise RuntimeError(
            "trial has positive local count but zero draw probability; "
            "the sampler violates its support contract"
        )
    return local_count / denom


def trial_value(g: Graph, d: TrialDraw) -> float:
    """Value of one recorded draw; 0 for degenerate draws."""
    if d.degenerate:
        return 0.0
    return beta_value(local_edge_count(g, d.i, d.j), d.p_i, d.q_j_given_i)


class Moments:
    """Streaming first/second moments of trial values.

    The first moment uses Kahan-compensated summation so that long runs
    (s > 1e5) do not drift; memory stays O(1) regardless of trial count.
    """

    __slots__ = ("count", "sum_sq", "_sum", "_comp")

    def __init__(self) -> None:
        self.count = 0
        self.sum_sq = 0.0
        self._sum = 0.0
        self._comp = 0.0

    def add(self, x: float) -> None:
        self.count += 1
        y = x - self._comp
        t = self._sum + y
        self._comp = (t - self._sum) - y
        self._sum = t
        self.sum_sq += x * x

    @property
    def total(self) -> float:
        return self._sum

    def empirical_variance(self) -> float:
        """Unbiased sample variance of the trials, divided by the trial count."""
        s = self.count
        if s < 2:
            return 0.0
        spread = self.sum_sq - self._sum * (self._sum / s)
        return max(spread, 0.0) / (s - 1) / s


@dataclass(frozen=True)
class Estimate:
    """Result of an estimation run, reproducible from (kind, trials, seed)."""

    value: float
    trials: int
    sum_beta: float
    sum_beta_sq: float
    empirical_variance: float
    kind: str
    seed: int
    trial_values: np.ndarray | None = field(default=None, compare=False, repr=False)


def finalize_estimate(
    moments: Moments, kind: str, seed: int, trial_values: np.ndarray | None = None
) -> Estimate:
    """Package accumulated moments; shared by in-memory and stream paths."""
    s = moments.count
    return Estimate(
        value=moments.total / s,
        trials=s,
        sum_beta=moments.total,
        sum_beta_sq=moments.sum_sq,
        empirical_variance=moments.empirical_variance(),
        kind=kind,
        seed=seed,
        trial_values=trial_values,
    )


def estimate(
    g: Graph,
    kind: str,
    s: int,
    seed: int = 0,
    oracle: TriangleProfile | None = None,
    keep_trials: bool = False,
) -> Estimate:
    """Run ``s`` independent trials of the given strategy and average them.

    Deterministic given (graph, kind, s, seed).  The "optimal" strategy
    needs the exact profile and computes it when not supplied -- by
    design it costs as much as exact counting.  ``keep_trials`` retains
    the per-trial values for diagnostics (O(s) memory instead of O(1)).
    """
    if s < 1:
        raise ValueError("trial count must be at least 1")
    if kind == OPTIMAL and oracle is None:
        oracle = count_exact(g)
    spec = build_sampler(g, kind, oracle)
    return run_trials(spec, s, seed, keep_trials=keep_trials)


def run_trials(spec: SamplerSpec, s: int, seed: int, keep_trials: bool = False) -> Estimate:
    """Trial loop for a prebuilt sampler; sequential and bit-reproducible."""
    g = spec.graph
    streams = seed_streams(seed)
    moments = Moments()
    retained = np.empty(s, dtype=np.float64) if keep_trials else None
    for t in range(s):
        b = trial_value(g, draw(spec, streams))
        moments.add(b)
        if retained is not None:
            retained[t] = b
    return finalize_estimate(moments, spec.kind, seed, retained)
