#pragma once

// Finite simple graphs on at most 64 labelled vertices, stored as one
// neighbour bitset per vertex.

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edgereg {

using Vertex = int;

// A set of vertex labels in [0, 64).
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }
  // {0, ..., n-1}
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  // Smallest member; undefined on the empty set.
  Vertex front() const { return std::countr_zero(bits_); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }
  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  VertexSet ends() const { return VertexSet::of({u, v}); }
  bool touches(Vertex w) const { return u == w || v == w; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);
  // Throws DomainError on self-loops or labels outside [0, n). Repeated edges
  // are merged.
  Graph(int n, std::span<const Edge> edges, std::vector<std::string> names = {});

  int order() const { return n_; }
  std::size_t edge_count() const;
  VertexSet vertices() const { return VertexSet::first(n_); }

  bool has_edge(Vertex a, Vertex b) const { return adj_[a].contains(b); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = adj_[v];
    s.insert(v);
    return s;
  }
  int degree(Vertex v) const { return adj_[v].size(); }
  // Neighbours of v inside the vertex subset `within`.
  VertexSet neighbors_in(Vertex v, VertexSet within) const { return adj_[v] & within; }

  // Edges in (u, v) lexicographic order.
  std::vector<Edge> edges() const;
  // Edges with both ends in `within`.
  std::vector<Edge> edges_within(VertexSet within) const;
  VertexSet isolated_vertices() const;
  // Vertices of degree at least one.
  VertexSet support() const { return vertices() - isolated_vertices(); }

  // Display name: explicit label if one was given, else "x<index>".
  std::string name(Vertex v) const;
  const std::vector<std::string>& names() const { return names_; }

  // Copy with one extra edge.
  Graph with_edge(Vertex a, Vertex b) const;

  void check_vertex(Vertex v) const;
  void check_vertices(VertexSet s) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> names_;
};

// A list of edges e_1, ..., e_s in which repeats are meaningful.
class EdgeMultiset {
 public:
  EdgeMultiset() = default;
  explicit EdgeMultiset(std::vector<Edge> edges);

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& operator[](std::size_t i) const { return edges_[i]; }
  // Distinct edges with their multiplicities, in sorted edge order.
  std::vector<std::pair<Edge, int>> distinct() const;
  int multiplicity(const Edge& e) const;
  // The multiset with one copy of the i-th entry removed.
  EdgeMultiset without(std::size_t i) const;
  // Entries whose both ends lie in `within`.
  EdgeMultiset restricted_to(VertexSet within) const;
  // DomainError unless every entry is an edge of g.
  void validate(const Graph& g) const;

  friend bool operator==(const EdgeMultiset&, const EdgeMultiset&) = default;

 private:
  std::vector<Edge> edges_;  // sorted
};

// --- constructors -------------------------------------------------------

Graph empty_graph(int n);
Graph path(int n);
Graph cycle(int n);  // DomainError for n < 3
Graph complete(int n);
Graph star(int leaves);
// Vertices of b are shifted to follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);
// Appends one pendant vertex z_x adjacent to x for every x in s, in
// increasing order of x.
Graph add_whiskers(const Graph& g, VertexSet s);

// --- derived graphs -----------------------------------------------------

// Induced subgraph on w, relabelled 0..|w|-1 in increasing label order; names
// are carried over.
Graph induced_subgraph(const Graph& g, VertexSet w);
// G \ U
Graph delete_vertices(const Graph& g, VertexSet u);
// N_G[u_1, ..., u_r]
VertexSet closed_nbhd(const Graph& g, VertexSet u);
VertexSet open_nbhd(const Graph& g, VertexSet u);
Graph complement(const Graph& g);
Graph remove_isolated(const Graph& g);
// Relabel so that new vertex i is old vertex perm[i].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// --- predicates ---------------------------------------------------------

// Maximum cardinality search followed by a perfect elimination check.
bool is_chordal(const Graph& g);
// Chordality of the induced subgraph on `within`.
bool is_chordal_on(const Graph& g, VertexSet within);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
// True iff g has an induced cycle of length exactly len.
bool has_induced_cycle(const Graph& g, int len);

// --- interchange --------------------------------------------------------

// Short-form graph6 (n <= 62). ParseError names the offending byte offset.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);
// {"n":5,"edges":[[0,1],...],"names":[...]}; names optional.
Graph graph_from_json(std::string_view text);
std::string graph_to_json(const Graph& g);
// Accepts either a graph6 string or a JSON adjacency object.
Graph parse_graph(std::string_view text);
// One graph6 string per non-empty line; '#' starts a comment line.
std::vector<Graph> read_graph6_lines(std::string_view text);

// --- isomorphism classes ------------------------------------------------

inline constexpr int kEnumerationGuard = 8;

// Upper-triangle adjacency bits in graph6 order, first bit most significant.
std::uint64_t adjacency_code(const Graph& g);
// Minimum adjacency_code over all n! relabellings (n <= 11).
std::uint64_t canonical_code(const Graph& g);
// The relabelling attaining canonical_code.
Graph canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

// One canonical representative per isomorphism class on exactly n vertices,
// ordered by edge count then canonical code. ResourceError if n exceeds the
// guard and override is false.
std::vector<Graph> enumerate_graphs(int n, bool no_isolated, bool guard_override = false);

}  // namespace edgereg
