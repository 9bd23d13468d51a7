"""Randomized triangle counting for simple undirected graphs.

Exact counting by adjacency intersection, five two-stage sampling
estimators with closed-form variance analytics and tail-bound sample
planning, and a two-pass variant for edge streams.
"""

from .analytics import (
    EDGE_BOUND,
    VERTEX_BOUND,
    ChernoffPlan,
    VarianceReport,
    chernoff_sample_size,
    make_plan,
    plan_from_profile,
    scaled_trial_statistic,
    variance_closed_form,
    variance_from_probabilities,
    variance_generic,
    variance_report,
)
from .estimator import Estimate, beta_value, estimate, run_trials, trial_value
from .exact import TriangleProfile, count_exact, local_edge_count
from .graph import (
    EdgeStreamSource,
    FileEdgeStream,
    Graph,
    MemoryEdgeStream,
    ParseError,
    has_edge,
    load_edge_list,
    write_edge_list,
)
from .rng import SampleStreams, seed_streams, weighted_choice
from .samplers import (
    EDGE_DEGREE,
    EDGE_UNIFORM,
    OPTIMAL,
    QOPT_DEGREE,
    QOPT_UNIFORM,
    SAMPLER_KINDS,
    SamplerSpec,
    TrialDraw,
    build_sampler,
    draw,
    draw_given_i,
    draw_vertex,
)
from .streaming import (
    StreamFormatError,
    StreamRun,
    StreamState,
    finalize_stream_estimate,
    pass1_neighborhoods,
    pass2_local_counts,
    pass_count_n,
    stream_estimate,
)

__version__ = "0.1.0"

__all__ = [
    "ChernoffPlan",
    "EDGE_BOUND",
    "EDGE_DEGREE",
    "EDGE_UNIFORM",
    "EdgeStreamSource",
    "Estimate",
    "FileEdgeStream",
    "Graph",
    "MemoryEdgeStream",
    "OPTIMAL",
    "ParseError",
    "QOPT_DEGREE",
    "QOPT_UNIFORM",
    "SAMPLER_KINDS",
    "SampleStreams",
    "SamplerSpec",
    "StreamFormatError",
    "StreamRun",
    "StreamState",
    "TriangleProfile",
    "TrialDraw",
    "VERTEX_BOUND",
    "VarianceReport",
    "beta_value",
    "build_sampler",
    "chernoff_sample_size",
    "count_exact",
    "draw",
    "draw_given_i",
    "draw_vertex",
    "estimate",
    "finalize_stream_estimate",
    "has_edge",
    "load_edge_list",
    "local_edge_count",
    "make_plan",
    "pass1_neighborhoods",
    "pass2_local_counts",
    "pass_count_n",
    "plan_from_profile",
    "run_trials",
    "scaled_trial_statistic",
    "seed_streams",
    "stream_estimate",
    "trial_value",
    "variance_closed_form",
    "variance_from_probabilities",
    "variance_generic",
    "variance_report",
    "weighted_choice",
    "write_edge_list",
]
