#pragma once

// Even-connections relative to an edge multiset, the colon graph G' whose
// edge ideal is the polarized colon (I(G)^{s+1} : e_1 ... e_s), and the
// X_1 / X_2 classification of the closed neighbourhood of a pivot endpoint.

#include <optional>
#include <string>
#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg {

// Walk p_0 ... p_{2k+1}. assignment[l] is the index into the multiset of the
// entry matched by {p_{2l+1}, p_{2l+2}}.
struct EvenConnection {
  std::vector<Vertex> path;
  std::vector<int> assignment;
  int k = 0;

  std::string to_json() const;
};

// Upper bound on remaining-multiplicity vectors explored by one search.
inline constexpr std::uint64_t kEvenStateGuard = std::uint64_t{1} << 22;

// Shortest certificate, or nullopt. k = 0 exactly when {u, v} is an edge.
// Only vertices in `within` are used, and only entries of `edges` with both
// ends in `within`.
std::optional<EvenConnection> find_even_connection(const Graph& g, const EdgeMultiset& edges, Vertex u, Vertex v);
std::optional<EvenConnection> find_even_connection(const Graph& g, VertexSet within, const EdgeMultiset& edges, Vertex u,
                                                   Vertex v);

// Checks conditions (1)-(4) of a certificate against g and the multiset.
bool is_valid_even_connection(const Graph& g, const EdgeMultiset& edges, Vertex u, Vertex v, const EvenConnection& c);

// Vertex of a colon graph: level 1 is the graph vertex itself, level 2 its
// shadow. key() packs both into one label below 2 * Graph::kMaxOrder.
struct ColonVertex {
  Vertex base = 0;
  int level = 1;

  int key() const { return 2 * base + (level - 1); }
  static ColonVertex from_key(int key) { return {key / 2, key % 2 + 1}; }
  friend bool operator==(const ColonVertex&, const ColonVertex&) = default;
};

// A graph on colon-vertex keys, used to compare colon graphs built from
// different induced subgraphs of the same G. Requires g.order() <= 32.
class KeyedGraph {
 public:
  KeyedGraph() : adj_(64) {}

  VertexSet keys() const { return keys_; }
  VertexSet neighbors(int key) const { return adj_[static_cast<std::size_t>(key)]; }
  bool has_edge(int a, int b) const { return adj_[static_cast<std::size_t>(a)].contains(b); }
  void add_key(int key) { keys_.insert(key); }
  void add_edge(int a, int b);

  // Induced subgraph on keys_ - drop.
  KeyedGraph without(VertexSet drop) const;
  VertexSet closed_neighbors(int key) const;
  std::vector<Edge> edges() const;

  friend bool operator==(const KeyedGraph&, const KeyedGraph&) = default;

 private:
  VertexSet keys_;
  std::vector<VertexSet> adj_;
};

// a is an induced subgraph of b on the keys both share, and every edge of a
// is an edge of b. Keys of a that are isolated in a may be absent from b.
bool is_induced_in(const KeyedGraph& a, const KeyedGraph& b);

// Colon graph of g[within] with respect to the entries of `edges` lying in
// g[within]. An empty multiset yields g[within] itself.
KeyedGraph colon_keyed(const Graph& g, VertexSet within, const EdgeMultiset& edges);

struct ColonGraph {
  Graph graph;                    // vertex i is (base[i], level[i])
  std::vector<Vertex> base;
  std::vector<int> level;
  std::vector<std::pair<Vertex, Vertex>> connected;  // even-connected pairs u <= v not adjacent in g
};

// G' with vertices ordered base-major, level-minor; the shadow of u is named
// "<name>^(2)". Matches the variable order of the polarized colon ideal.
ColonGraph colon_graph(const Graph& g, const EdgeMultiset& edges);

struct NeighborClassification {
  Edge pivot;
  Vertex x = 0;
  Vertex y = 0;
  std::vector<ColonVertex> x1;
  std::vector<ColonVertex> x2;
  // Members of N_{G'}[y] with no connection to y at all (only y itself can
  // land here, when y is not self-connected).
  std::vector<ColonVertex> unclassified;
  // One certificate u ~> y per classified vertex, parallel to x1 and x2.
  std::vector<EvenConnection> x1_witness;
  std::vector<EvenConnection> x2_witness;
};

// Classification of N_{G'}[y] for pivot entry i = {x, y} of the multiset.
// DomainError if i is out of range or y is not an end of entry i.
NeighborClassification classify_neighbors(const Graph& g, const EdgeMultiset& edges, std::size_t i, Vertex y);

}  // namespace edgereg
