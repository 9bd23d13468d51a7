# Estimating triangles from an edge stream in two passes.
#
# Pass 1 marks the neighborhoods of the sampled vertices in bit vectors;
# pass 2 counts, for every stream edge, the sampled vertices adjacent to
# both endpoints.  If the vertex count is unknown an extra counting pass
# runs first.  State is O(s * n) and the result is bit-identical to the
# in-memory "qopt-uniform" estimator under the same seed.

from trisample import Graph, MemoryEdgeStream, estimate, stream_estimate

edges = [(0, 1), (0, 2), (1, 2), (2, 3)]
paw = Graph.from_edges(edges)

source = MemoryEdgeStream(edges)
run = stream_estimate(source, s=64, seed=7, n=4)
print("estimate:", run.estimate.value)
print("passes used:", run.passes_used)
print("state bytes:", run.state.state_bytes, f"({run.state.state_bytes / (64 * 4):.2f} per s*n cell)")

# Without n, a counting pass runs first.
run3 = stream_estimate(MemoryEdgeStream(edges), s=64, seed=7)
print("passes without n:", run3.passes_used)

# Same seed, same substreams, same arithmetic: the in-memory estimator
# produces the identical result.
mem = estimate(paw, "qopt-uniform", s=64, seed=7)
print("in-memory value :", mem.value)
print("bit-identical   :", run.estimate == mem)
