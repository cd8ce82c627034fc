#pragma once

// Exact combinatorial invariants of small graphs: matching numbers,
// co-chordal covers, star packings and vertex decomposability.

#include <functional>
#include <optional>
#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg {

int matching_number(const Graph& g);
// Largest set of edges no two of which share a vertex or are joined by an edge.
int induced_matching_number(const Graph& g);
// Smallest cardinality of a maximal matching.
int min_max_matching(const Graph& g);

inline constexpr int kCochordEdgeGuard = 20;

// True iff the complement of the subgraph formed by `edges` (taken on the
// vertices those edges touch) is chordal.
bool is_cochordal_edge_set(const Graph& g, std::span<const Edge> edges);
// Fewest co-chordal subgraphs whose edge sets cover E(g). ResourceError above
// kCochordEdgeGuard edges unless overridden.
int cochordal_cover_number(const Graph& g, bool guard_override = false);

// A maximal run of the star-packing process. Vertices are labels of the
// input graph.
struct StarPacking {
  std::vector<Vertex> centers;        // v_1, ..., v_k
  std::vector<Edge> residual_edges;   // w_1, ..., w_r
  std::vector<VertexSet> trace;       // vertex sets of H_1, ..., H_k

  int weight() const { return static_cast<int>(centers.size() + residual_edges.size()); }
};

// Every packing the process can produce, in depth-first order of center
// choices (smallest label first). Isolated vertices of g are ignored.
std::vector<StarPacking> all_star_packings(const Graph& g);

struct ZetaResult {
  int value = 0;
  StarPacking witness;
};

// Maximum packing weight. A graph whose edges are already pairwise disjoint
// has the empty center sequence and weight |E|.
ZetaResult zeta(const Graph& g);

inline constexpr int kDecomposabilityGuard = 12;

// Calls f(S) for each maximal independent set S of g[within].
void for_each_maximal_independent_set(const Graph& g, VertexSet within, const std::function<void(VertexSet)>& f);
std::vector<VertexSet> maximal_independent_sets(const Graph& g, VertexSet within);

// No independent set of g \ N[x] is a maximal independent set of g \ x.
bool is_shedding_vertex(const Graph& g, Vertex x);

bool is_vertex_decomposable(const Graph& g, bool guard_override = false);

// {x : x is a shedding vertex and g \ x is vertex decomposable}
VertexSet shedding_set(const Graph& g, bool guard_override = false);

// One step of a vertex decomposition: at the induced subgraph on `graph`,
// vertex `shedding` was split off.
struct DecompositionStep {
  VertexSet graph;
  Vertex shedding = -1;
};

// Shedding choices of a full vertex decomposition, visiting G \ x before
// G \ N[x] at each split; empty optional if g is not vertex decomposable.
struct SheddingCertificate {
  Vertex vertex = -1;                  // the top-level shedding vertex
  std::vector<DecompositionStep> steps;
};
std::optional<SheddingCertificate> vertex_decomposition(const Graph& g, bool guard_override = false);

}  // namespace edgereg
