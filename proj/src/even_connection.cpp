#include "edgereg/even_connection.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "edgereg/error.hpp"
#include "json.hpp"

namespace edgereg {

std::string EvenConnection::to_json() const {
  nlohmann::json j;
  j["path"] = path;
  j["assignment"] = assignment;
  j["k"] = k;
  return j.dump();
}

namespace {

// Flag values tracking how the pivot edge has been traversed.
enum : int { kUnused = 0, kYtoX = 1, kXtoYOnly = 2 };

// Breadth-first search over walks that alternate a G-edge with an unused
// multiset entry, starting and ending with a G-edge. A state is the current
// vertex, the remaining multiplicities (mixed radix), the phase (0: next step
// is a G-edge, 1: a G-edge was just taken) and the pivot flag.
class WalkSearch {
 public:
  WalkSearch(const Graph& g, VertexSet within, const EdgeMultiset& edges, std::optional<Edge> pivot = {},
             Vertex pivot_y = -1)
      : g_(g), within_(within), pivot_(pivot), y_(pivot_y) {
    std::uint64_t stride = 1;
    std::size_t index = 0;
    for (const auto& [e, mult] : edges.distinct()) {
      if (within.contains(e.u) && within.contains(e.v)) {
        distinct_.push_back(e);
        stride_.push_back(stride);
        radix_.push_back(static_cast<std::uint64_t>(mult) + 1);
        first_index_.push_back(index);
        if (stride > kEvenStateGuard / (static_cast<std::uint64_t>(mult) + 1))
          throw ResourceError("even-connection search exceeds " + std::to_string(kEvenStateGuard) +
                              " multiplicity states");
        stride *= static_cast<std::uint64_t>(mult) + 1;
        full_ += stride_.back() * static_cast<std::uint64_t>(mult);
      }
      index += static_cast<std::size_t>(mult);
    }
  }

  struct State {
    Vertex v;
    std::uint64_t code;
    int phase;
    int flag;
  };

  // Explores everything reachable from u.
  void run(Vertex u) {
    parent_.clear();
    order_.clear();
    State s{u, full_, 0, kUnused};
    parent_.emplace(pack(s), Link{~std::uint64_t{0}, -1});
    order_.push_back(s);
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const State cur = order_[head];
      const std::uint64_t id = pack(cur);
      if (cur.phase == 0) {
        for (Vertex w : g_.neighbors_in(cur.v, within_)) visit({w, cur.code, 1, cur.flag}, id, -1);
        continue;
      }
      for (std::size_t j = 0; j < distinct_.size(); ++j) {
        if (!distinct_[j].touches(cur.v) || remaining(cur.code, j) == 0) continue;
        const Vertex w = distinct_[j].u == cur.v ? distinct_[j].v : distinct_[j].u;
        int flag = cur.flag;
        if (pivot_ && distinct_[j] == *pivot_) {
          if (cur.v == y_)
            flag = kYtoX;
          else if (flag == kUnused)
            flag = kXtoYOnly;
        }
        visit({w, cur.code - stride_[j], 0, flag}, id, static_cast<int>(j));
      }
    }
  }

  // Vertices reached right after a G-edge.
  VertexSet ends() const {
    VertexSet out;
    for (const State& s : order_)
      if (s.phase == 1) out.insert(s.v);
    return out;
  }

  // First state in BFS order ending at v with a flag accepted by `ok`.
  template <class Pred>
  std::optional<State> first_end(Vertex v, Pred ok) const {
    for (const State& s : order_)
      if (s.phase == 1 && s.v == v && ok(s.flag)) return s;
    return std::nullopt;
  }

  EvenConnection certificate(const State& end) const {
    std::vector<Vertex> path;
    std::vector<int> used;
    std::uint64_t id = pack(end);
    for (;;) {
      path.push_back(unpack_vertex(id));
      const Link& l = parent_.at(id);
      if (l.prev == ~std::uint64_t{0}) break;
      if (l.via >= 0) used.push_back(l.via);
      id = l.prev;
    }
    std::reverse(path.begin(), path.end());
    std::reverse(used.begin(), used.end());
    EvenConnection c;
    c.path = std::move(path);
    c.k = static_cast<int>(used.size());
    std::vector<int> taken(distinct_.size(), 0);
    for (int j : used) {
      const auto sj = static_cast<std::size_t>(j);
      c.assignment.push_back(static_cast<int>(first_index_[sj]) + taken[sj]++);
    }
    return c;
  }

 private:
  struct Link {
    std::uint64_t prev;
    int via;  // distinct-edge index for an entry step, -1 for a G-edge step
  };

  std::uint64_t remaining(std::uint64_t code, std::size_t j) const { return (code / stride_[j]) % radix_[j]; }

  std::uint64_t pack(const State& s) const {
    return ((s.code * 64 + static_cast<std::uint64_t>(s.v)) * 2 + static_cast<std::uint64_t>(s.phase)) * 3 +
           static_cast<std::uint64_t>(s.flag);
  }
  static Vertex unpack_vertex(std::uint64_t id) { return static_cast<Vertex>((id / 6) % 64); }

  void visit(const State& s, std::uint64_t from, int via) {
    if (parent_.emplace(pack(s), Link{from, via}).second) order_.push_back(s);
  }

  const Graph& g_;
  VertexSet within_;
  std::optional<Edge> pivot_;
  Vertex y_;
  std::vector<Edge> distinct_;
  std::vector<std::uint64_t> stride_, radix_;
  std::vector<std::size_t> first_index_;
  std::uint64_t full_ = 0;
  std::unordered_map<std::uint64_t, Link> parent_;
  std::vector<State> order_;
};

void check_keyed_order(const Graph& g) {
  if (g.order() > 32) throw ResourceError("colon graphs are limited to 32 base vertices");
}

}  // namespace

std::optional<EvenConnection> find_even_connection(const Graph& g, VertexSet within, const EdgeMultiset& edges, Vertex u,
                                                   Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  edges.validate(g);
  if (!within.contains(u) || !within.contains(v)) return std::nullopt;
  WalkSearch search(g, within, edges);
  search.run(u);
  auto end = search.first_end(v, [](int) { return true; });
  if (!end) return std::nullopt;
  return search.certificate(*end);
}

std::optional<EvenConnection> find_even_connection(const Graph& g, const EdgeMultiset& edges, Vertex u, Vertex v) {
  return find_even_connection(g, g.vertices(), edges, u, v);
}

bool is_valid_even_connection(const Graph& g, const EdgeMultiset& edges, Vertex u, Vertex v, const EvenConnection& c) {
  const auto len = c.path.size();
  if (len != static_cast<std::size_t>(2 * c.k + 2) || c.assignment.size() != static_cast<std::size_t>(c.k)) return false;
  if (c.path.front() != u || c.path.back() != v) return false;
  for (Vertex p : c.path)
    if (p < 0 || p >= g.order()) return false;
  for (std::size_t r = 0; r + 1 < len; ++r)
    if (!g.has_edge(c.path[r], c.path[r + 1])) return false;
  std::vector<int> seen(edges.size(), 0);
  for (int l = 0; l < c.k; ++l) {
    const int idx = c.assignment[static_cast<std::size_t>(l)];
    if (idx < 0 || static_cast<std::size_t>(idx) >= edges.size()) return false;
    if (seen[static_cast<std::size_t>(idx)]++) return false;
    const auto p = static_cast<std::size_t>(2 * l + 1);
    if (!(Edge(c.path[p], c.path[p + 1]) == edges[static_cast<std::size_t>(idx)])) return false;
  }
  return true;
}

// --- keyed graphs -----------------------------------------------------

void KeyedGraph::add_edge(int a, int b) {
  add_key(a);
  add_key(b);
  adj_[static_cast<std::size_t>(a)].insert(b);
  adj_[static_cast<std::size_t>(b)].insert(a);
}

KeyedGraph KeyedGraph::without(VertexSet drop) const {
  KeyedGraph out;
  out.keys_ = keys_ - drop;
  for (int k : out.keys_) out.adj_[static_cast<std::size_t>(k)] = adj_[static_cast<std::size_t>(k)] & out.keys_;
  return out;
}

VertexSet KeyedGraph::closed_neighbors(int key) const {
  VertexSet s = adj_[static_cast<std::size_t>(key)];
  s.insert(key);
  return s;
}

std::vector<Edge> KeyedGraph::edges() const {
  std::vector<Edge> out;
  for (int a : keys_)
    for (int b : adj_[static_cast<std::size_t>(a)])
      if (a < b) out.emplace_back(a, b);
  return out;
}

bool is_induced_in(const KeyedGraph& a, const KeyedGraph& b) {
  for (const Edge& e : a.edges())
    if (!b.has_edge(e.u, e.v)) return false;
  const VertexSet common = a.keys() & b.keys();
  for (int k : common)
    if ((b.neighbors(k) & common) != (a.neighbors(k) & common)) return false;
  return true;
}

KeyedGraph colon_keyed(const Graph& g, VertexSet within, const EdgeMultiset& edges) {
  check_keyed_order(g);
  g.check_vertices(within);
  edges.validate(g);
  KeyedGraph out;
  for (Vertex u : within) out.add_key(ColonVertex{u, 1}.key());
  WalkSearch search(g, within, edges);
  for (Vertex u : within) {
    search.run(u);
    for (Vertex v : search.ends()) {
      if (v == u)
        out.add_edge(ColonVertex{u, 1}.key(), ColonVertex{u, 2}.key());
      else
        out.add_edge(ColonVertex{u, 1}.key(), ColonVertex{v, 1}.key());
    }
  }
  return out;
}

ColonGraph colon_graph(const Graph& g, const EdgeMultiset& edges) {
  const KeyedGraph k = colon_keyed(g, g.vertices(), edges);
  ColonGraph out;
  std::vector<int> index_of(64, -1);
  std::vector<std::string> names;
  for (int key : k.keys()) {
    const ColonVertex cv = ColonVertex::from_key(key);
    index_of[static_cast<std::size_t>(key)] = static_cast<int>(out.base.size());
    out.base.push_back(cv.base);
    out.level.push_back(cv.level);
    names.push_back(cv.level == 1 ? g.name(cv.base) : g.name(cv.base) + "^(2)");
  }
  std::vector<Edge> es;
  for (const Edge& e : k.edges()) {
    es.emplace_back(index_of[static_cast<std::size_t>(e.u)], index_of[static_cast<std::size_t>(e.v)]);
    const ColonVertex a = ColonVertex::from_key(e.u), b = ColonVertex::from_key(e.v);
    if (b.level == 2)
      out.connected.emplace_back(a.base, a.base);
    else if (!g.has_edge(a.base, b.base))
      out.connected.emplace_back(a.base, b.base);
  }
  std::sort(out.connected.begin(), out.connected.end());
  const int order = static_cast<int>(names.size());
  out.graph = Graph(order, es, std::move(names));
  return out;
}

NeighborClassification classify_neighbors(const Graph& g, const EdgeMultiset& edges, std::size_t i, Vertex y) {
  if (i >= edges.size())
    throw DomainError("pivot index " + std::to_string(i) + " is out of range for " + std::to_string(edges.size()) +
                      " edges");
  const Edge pivot = edges[i];
  if (!pivot.touches(y)) throw DomainError("vertex " + std::to_string(y) + " is not an end of the pivot edge");
  check_keyed_order(g);
  NeighborClassification out;
  out.pivot = pivot;
  out.y = y;
  out.x = pivot.u == y ? pivot.v : pivot.u;

  const KeyedGraph k = colon_keyed(g, g.vertices(), edges);
  WalkSearch search(g, g.vertices(), edges, pivot, y);
  for (int key : k.closed_neighbors(ColonVertex{y, 1}.key())) {
    const ColonVertex cv = ColonVertex::from_key(key);
    search.run(cv.base);
    auto one = search.first_end(y, [](int f) { return f != kXtoYOnly; });
    if (one) {
      out.x1.push_back(cv);
      out.x1_witness.push_back(search.certificate(*one));
      continue;
    }
    auto three = search.first_end(y, [](int f) { return f == kXtoYOnly; });
    if (three) {
      out.x2.push_back(cv);
      out.x2_witness.push_back(search.certificate(*three));
    } else {
      out.unclassified.push_back(cv);
    }
  }
  return out;
}

}  // namespace edgereg
