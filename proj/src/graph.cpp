#include "edgereg/graph.hpp"

#include <algorithm>

#include "edgereg/error.hpp"

namespace edgereg {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0 || n > kMaxOrder) throw DomainError("graph order must lie in [0, 64], got " + std::to_string(n));
}

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> names) : Graph(n) {
  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    adj_[e.u].insert(e.v);
    adj_[e.v].insert(e.u);
  }
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw DomainError("expected " + std::to_string(n) + " vertex names, got " + std::to_string(names.size()));
  names_ = std::move(names);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const VertexSet& s : adj_) twice += static_cast<std::size_t>(s.size());
  return twice / 2;
}

std::vector<Edge> Graph::edges() const { return edges_within(vertices()); }

std::vector<Edge> Graph::edges_within(VertexSet within) const {
  std::vector<Edge> out;
  for (Vertex u : within)
    for (Vertex v : adj_[u] & within)
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::isolated_vertices() const {
  VertexSet s;
  for (Vertex v = 0; v < n_; ++v)
    if (adj_[v].empty()) s.insert(v);
  return s;
}

std::string Graph::name(Vertex v) const {
  if (!names_.empty()) return names_[static_cast<std::size_t>(v)];
  return "x" + std::to_string(v);
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw DomainError("self-loop at vertex " + std::to_string(a));
  Graph g = *this;
  g.adj_[a].insert(b);
  g.adj_[b].insert(a);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw DomainError("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(n_) +
                      " vertices");
}

void Graph::check_vertices(VertexSet s) const {
  if (!s.is_subset_of(vertices()))
    throw DomainError("vertex " + std::to_string((s - vertices()).front()) + " out of range for graph on " +
                      std::to_string(n_) + " vertices");
}

// --- EdgeMultiset ---------------------------------------------------------

EdgeMultiset::EdgeMultiset(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (const Edge& e : edges_)
    if (e.u == e.v) throw DomainError("edge multiset contains a loop at " + std::to_string(e.u));
  std::sort(edges_.begin(), edges_.end());
}

std::vector<std::pair<Edge, int>> EdgeMultiset::distinct() const {
  std::vector<std::pair<Edge, int>> out;
  for (const Edge& e : edges_) {
    if (!out.empty() && out.back().first == e)
      ++out.back().second;
    else
      out.emplace_back(e, 1);
  }
  return out;
}

int EdgeMultiset::multiplicity(const Edge& e) const {
  return static_cast<int>(std::count(edges_.begin(), edges_.end(), e));
}

EdgeMultiset EdgeMultiset::without(std::size_t i) const {
  std::vector<Edge> rest = edges_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
  return EdgeMultiset(std::move(rest));
}

EdgeMultiset EdgeMultiset::restricted_to(VertexSet within) const {
  std::vector<Edge> kept;
  for (const Edge& e : edges_)
    if (e.ends().is_subset_of(within)) kept.push_back(e);
  return EdgeMultiset(std::move(kept));
}

void EdgeMultiset::validate(const Graph& g) const {
  for (const Edge& e : edges_) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    if (!g.has_edge(e.u, e.v))
      throw DomainError("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge of the graph");
  }
}

// --- constructors ---------------------------------------------------------

Graph empty_graph(int n) { return Graph(n); }

Graph path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph cycle(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

Graph complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph star(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph(leaves + 1, es);
}

namespace {

std::vector<std::string> all_names(const Graph& g) {
  std::vector<std::string> out;
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.name(v));
  return out;
}

}  // namespace

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  std::vector<Edge> es = a.edges();
  for (const Edge& e : b.edges()) es.emplace_back(e.u + shift, e.v + shift);
  std::vector<std::string> names;
  if (!a.names().empty() || !b.names().empty()) {
    names = all_names(a);
    for (Vertex v = 0; v < b.order(); ++v) names.push_back(b.names().empty() ? "x" + std::to_string(v + shift) : b.name(v));
  }
  return Graph(a.order() + b.order(), es, std::move(names));
}

Graph add_whiskers(const Graph& g, VertexSet s) {
  g.check_vertices(s);
  std::vector<Edge> es = g.edges();
  int next = g.order();
  std::vector<std::string> names = all_names(g);
  for (Vertex x : s) {
    es.emplace_back(x, next++);
    names.push_back("z_" + g.name(x));
  }
  return Graph(next, es, std::move(names));
}

// --- derived graphs -------------------------------------------------------

Graph induced_subgraph(const Graph& g, VertexSet w) {
  g.check_vertices(w);
  std::vector<Vertex> keep = w.to_vector();
  return relabel(g, keep);
}

Graph delete_vertices(const Graph& g, VertexSet u) {
  g.check_vertices(u);
  return induced_subgraph(g, g.vertices() - u);
}

VertexSet open_nbhd(const Graph& g, VertexSet u) {
  g.check_vertices(u);
  VertexSet out;
  for (Vertex v : u) out |= g.neighbors(v);
  return out;
}

VertexSet closed_nbhd(const Graph& g, VertexSet u) { return open_nbhd(g, u) | u; }

Graph complement(const Graph& g) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) es.emplace_back(u, v);
  return Graph(g.order(), es, g.names());
}

Graph remove_isolated(const Graph& g) { return induced_subgraph(g, g.support()); }

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const int m = static_cast<int>(perm.size());
  std::vector<int> where(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < m; ++i) {
    g.check_vertex(perm[i]);
    where[static_cast<std::size_t>(perm[i])] = i;
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    int a = where[static_cast<std::size_t>(e.u)], b = where[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) es.emplace_back(a, b);
  }
  std::vector<std::string> names;
  if (!g.names().empty())
    for (Vertex v : perm) names.push_back(g.name(v));
  return Graph(m, es, std::move(names));
}

// --- predicates -----------------------------------------------------------

bool is_chordal_on(const Graph& g, VertexSet within) {
  // Maximum cardinality search: each visited vertex's earlier-visited
  // neighbours must form a clique.
  VertexSet visited;
  std::vector<int> weight(static_cast<std::size_t>(g.order()), 0);
  const int count = within.size();
  for (int step = 0; step < count; ++step) {
    Vertex best = -1;
    for (Vertex v : within - visited)
      if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
    VertexSet earlier = g.neighbors(best) & visited;
    for (Vertex u : earlier)
      if (!(earlier - VertexSet::of({u})).is_subset_of(g.neighbors(u))) return false;
    visited.insert(best);
    for (Vertex v : g.neighbors(best) & (within - visited)) ++weight[static_cast<std::size_t>(v)];
  }
  return true;
}

bool is_chordal(const Graph& g) { return is_chordal_on(g, g.vertices()); }

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = VertexSet::of({left.front()});
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next = open_nbhd(g, frontier) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool has_induced_cycle(const Graph& g, int len) {
  if (len < 3 || len > g.order()) return false;
  if (g.order() > 24) throw ResourceError("induced cycle search is limited to 24 vertices");
  // Walk over subsets of size len in Gosper order.
  const int n = g.order();
  std::uint64_t s = (std::uint64_t{1} << len) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (s < limit) {
    VertexSet w(s);
    bool two_regular = true;
    for (Vertex v : w)
      if (g.neighbors_in(v, w).size() != 2) {
        two_regular = false;
        break;
      }
    if (two_regular && is_connected(induced_subgraph(g, w))) return true;
    std::uint64_t c = s & (~s + 1), r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return false;
}

}  // namespace edgereg
