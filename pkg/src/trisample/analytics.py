"""Closed-form estimator variance and sample-size planning.

The variance of a single trial under first/second-stage probabilities
(p, q) is

    Var = (1/36) * sum_{i,j} T_{ij}^2 / (p_i q_{j|i})  -  T^2

summed over ordered pairs with T_{ij} > 0; the variance of the mean of
``s`` trials is that divided by s.  Each built-in strategy also has a
specialized closed form, and the two must agree; both are exposed so
they can be checked against each other.

Sample-size planning inverts the exponential tail bound
exp(-eps^2 s avg / (2 ub)) <= n^(-c) for the smallest integer s, where
``ub`` bounds every local count and ``avg`` is the mean local count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .exact import TriangleProfile
from .graph import Graph
from .samplers import (
    EDGE_DEGREE,
    EDGE_UNIFORM,
    OPTIMAL,
    QOPT_DEGREE,
    QOPT_UNIFORM,
    SAMPLER_KINDS,
    build_sampler,
)

VERTEX_BOUND = "vertex"
EDGE_BOUND = "edge"


@dataclass(frozen=True)
class VarianceReport:
    """Specialized and generic variance of one strategy at trial count s."""

    kind: str
    s: int
    analytical_variance: float
    generic_variance: float


@dataclass(frozen=True)
class ChernoffPlan:
    """Planned trial count for a relative-error target.

    ``upper_bound`` dominates every per-vertex (or per-edge) local
    triangle count and ``average`` is the triangle count divided by n
    (or m).  Running ``s`` trials keeps the relative overestimation
    error below ``epsilon`` except with probability n^(-c).
    """

    epsilon: float
    c: float
    bound_kind: str
    upper_bound: float
    average: float
    s: int


def variance_from_probabilities(
    profile: TriangleProfile,
    p_of: Callable[[int], float],
    q_of: Callable[[int, int], float],
    s: int = 1,
) -> float:
    """Evaluate the generic variance sum for arbitrary (p, q) accessors.

    Every ordered pair with a positive local count must have positive
    draw probability, otherwise the estimator the probabilities describe
    is not even unbiased and the sum is meaningless.
    """
    if s < 1:
        raise ValueError("trial count must be at least 1")
    acc = 0.0
    for (i, j), c in profile.per_edge.items():
        if c == 0:
            continue
        for a, b in ((i, j), (j, i)):
            pq = p_of(a) * q_of(a, b)
            if pq <= 0.0:
                raise ValueError(
                    f"support violation: pair ({a},{b}) has local count {c} "
                    "but zero draw probability"
                )
            acc += (c * c) / pq
    return (acc / 36.0 - profile.total**2) / s


def variance_generic(g: Graph, profile: TriangleProfile, kind: str, s: int = 1) -> float:
    """Generic variance sum evaluated with the strategy's own accessors."""
    spec = build_sampler(g, kind, profile)
    return variance_from_probabilities(profile, spec.p, spec.q, s)


def variance_closed_form(g: Graph, profile: TriangleProfile, kind: str, s: int = 1) -> float:
    """Specialized variance formula for each built-in strategy."""
    if s < 1:
        raise ValueError("trial count must be at least 1")
    if kind not in SAMPLER_KINDS:
        raise ValueError(f"unknown sampler kind {kind!r}; choose from {SAMPLER_KINDS}")
    total_sq = float(profile.total**2)
    if kind == OPTIMAL:
        return 0.0
    if kind == QOPT_UNIFORM:
        acc = sum(int(d) ** 2 for d in profile.per_vertex)
        return (g.n / 9.0 * acc - total_sq) / s
    if kind == QOPT_DEGREE:
        degrees = g.degrees
        acc = 0.0
        for i in range(g.n):
            d_i = int(profile.per_vertex[i])
            if d_i:
                acc += d_i * d_i / int(degrees[i])
        return (2.0 * g.m / 9.0 * acc - total_sq) / s
    sq_by_vertex = [0] * g.n
    for (i, j), c in profile.per_edge.items():
        sq_by_vertex[i] += c * c
        sq_by_vertex[j] += c * c
    if kind == EDGE_UNIFORM:
        degrees = g.degrees
        acc = sum(int(degrees[i]) * sq_by_vertex[i] for i in range(g.n))
        return (g.n / 36.0 * acc - total_sq) / s
    acc = sum(sq_by_vertex)  # ordered-pair sum of squared local counts
    return (g.m / 18.0 * acc - total_sq) / s


def variance_report(g: Graph, profile: TriangleProfile, kind: str, s: int = 1) -> VarianceReport:
    return VarianceReport(
        kind=kind,
        s=s,
        analytical_variance=variance_closed_form(g, profile, kind, s),
        generic_variance=variance_generic(g, profile, kind, s),
    )


def chernoff_sample_size(
    epsilon: float, c: float, universe: int, upper_bound: float, average: float
) -> int:
    """Smallest s with exp(-eps^2 s avg / (2 ub)) <= universe^(-c).

    ``universe`` is the vertex count n entering the n^(-c) failure
    target; the same inversion serves both the per-vertex and per-edge
    plans.
    """
    if not 0.0 < epsilon < 1.0:
        raise ValueError("epsilon must lie strictly between 0 and 1")
    if c <= 0.0:
        raise ValueError("failure exponent c must be positive")
    if universe < 2:
        raise ValueError("universe size must be at least 2")
    if average <= 0.0:
        raise ValueError(
            "average local count is 0 (triangle-free input): "
            "no finite trial count gives a relative guarantee"
        )
    if upper_bound < average:
        raise ValueError("upper_bound must be at least the average")
    s = math.ceil(2.0 * c * (upper_bound / average) * math.log(universe) / (epsilon * epsilon))
    return max(int(s), 1)


def make_plan(
    epsilon: float,
    c: float,
    universe: int,
    upper_bound: float,
    average: float,
    bound_kind: str,
) -> ChernoffPlan:
    if bound_kind not in (VERTEX_BOUND, EDGE_BOUND):
        raise ValueError(f"bound_kind must be {VERTEX_BOUND!r} or {EDGE_BOUND!r}")
    s = chernoff_sample_size(epsilon, c, universe, upper_bound, average)
    return ChernoffPlan(
        epsilon=epsilon,
        c=c,
        bound_kind=bound_kind,
        upper_bound=upper_bound,
        average=average,
        s=s,
    )


def plan_from_profile(
    g: Graph,
    profile: TriangleProfile,
    epsilon: float,
    c: float,
    bound_kind: str,
    upper_bound: float | None = None,
) -> ChernoffPlan:
    """Build a plan with the average (and optionally the bound) taken from the oracle."""
    if bound_kind == VERTEX_BOUND:
        average = profile.total / g.n
        derived_upper = float(profile.max_per_vertex)
    elif bound_kind == EDGE_BOUND:
        if g.m == 0:
            raise ValueError("edge-bound plan needs at least one edge")
        average = profile.total / g.m
        derived_upper = float(profile.max_per_edge)
    else:
        raise ValueError(f"bound_kind must be {VERTEX_BOUND!r} or {EDGE_BOUND!r}")
    ub = derived_upper if upper_bound is None else float(upper_bound)
    return make_plan(epsilon, c, g.n, ub, average, bound_kind)


def scaled_trial_statistic(beta_t: float, scale: float) -> float:
    """Normalize a trial value into [0, 1] for the tail-bound argument.

    ``scale`` is n * ub for vertex bounds or m * ub for edge bounds; the
    estimate is recovered as (scale / s) * sum of the statistics.  A
    result above 1 means the supplied bound was not actually a bound.
    """
    if scale <= 0.0:
        raise ValueError("scale must be positive")
    x = beta_t / scale
    if x > 1.0:
        raise ValueError(
            f"scaled statistic {x} exceeds 1: the supplied upper bound is not "
            "an upper bound on the local counts"
        )
    return x
