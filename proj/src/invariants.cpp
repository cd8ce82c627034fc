#include "edgereg/invariants.hpp"

#include <algorithm>
#include <unordered_map>

#include "edgereg/error.hpp"

namespace edgereg {

namespace {

// Vertices of `within` with at least one neighbour in `within`.
VertexSet active(const Graph& g, VertexSet within) {
  VertexSet out;
  for (Vertex v : within)
    if (g.neighbors(v).intersects(within)) out.insert(v);
  return out;
}

// First vertex of `avail` with a neighbour in `avail`, or -1.
Vertex first_non_isolated(const Graph& g, VertexSet avail) {
  for (Vertex v : avail)
    if (g.neighbors(v).intersects(avail)) return v;
  return -1;
}

}  // namespace

int matching_number(const Graph& g) {
  std::unordered_map<std::uint64_t, int> memo;
  std::function<int(VertexSet)> best = [&](VertexSet avail) -> int {
    Vertex u = first_non_isolated(g, avail);
    if (u < 0) return 0;
    if (auto it = memo.find(avail.bits()); it != memo.end()) return it->second;
    int result = best(avail - VertexSet::of({u}));
    for (Vertex w : g.neighbors_in(u, avail)) result = std::max(result, 1 + best(avail - VertexSet::of({u, w})));
    memo.emplace(avail.bits(), result);
    return result;
  };
  return best(g.vertices());
}

int induced_matching_number(const Graph& g) {
  std::unordered_map<std::uint64_t, int> memo;
  std::function<int(VertexSet)> best = [&](VertexSet avail) -> int {
    Vertex u = first_non_isolated(g, avail);
    if (u < 0) return 0;
    if (auto it = memo.find(avail.bits()); it != memo.end()) return it->second;
    int result = best(avail - VertexSet::of({u}));
    for (Vertex w : g.neighbors_in(u, avail))
      result = std::max(result, 1 + best(avail - g.closed_neighbors(u) - g.closed_neighbors(w)));
    memo.emplace(avail.bits(), result);
    return result;
  };
  return best(g.vertices());
}

int min_max_matching(const Graph& g) {
  // A maximal matching must cover one end of every edge whose ends are both
  // unmatched, so branch on the edges meeting the first such edge.
  std::unordered_map<std::uint64_t, int> memo;
  std::function<int(VertexSet)> best = [&](VertexSet free) -> int {
    Vertex u = first_non_isolated(g, free);
    if (u < 0) return 0;
    if (auto it = memo.find(free.bits()); it != memo.end()) return it->second;
    Vertex v = g.neighbors_in(u, free).front();
    int result = -1;
    for (Vertex end : {u, v})
      for (Vertex w : g.neighbors_in(end, free)) {
        int r = 1 + best(free - VertexSet::of({end, w}));
        if (result < 0 || r < result) result = r;
      }
    memo.emplace(free.bits(), result);
    return result;
  };
  return best(g.vertices());
}

// --- co-chordal covers --------------------------------------------------

bool is_cochordal_edge_set(const Graph& g, std::span<const Edge> edges) {
  VertexSet support;
  for (const Edge& e : edges) support |= e.ends();
  std::vector<Edge> comp;
  for (Vertex u : support)
    for (Vertex v : support)
      if (u < v && std::find(edges.begin(), edges.end(), Edge(u, v)) == edges.end()) comp.emplace_back(u, v);
  return is_chordal_on(Graph(g.order(), comp), support);
}

int cochordal_cover_number(const Graph& g, bool guard_override) {
  const std::vector<Edge> es = g.edges();
  const int m = static_cast<int>(es.size());
  if (m == 0) return 0;
  if (m > kCochordEdgeGuard && !guard_override)
    throw ResourceError("co-chordal cover search is guarded at " + std::to_string(kCochordEdgeGuard) + " edges, graph has " +
                        std::to_string(m));
  if (m > 26) throw ResourceError("co-chordal cover search cannot exceed 26 edges");

  // Enumerate co-chordal edge subsets, keep the inclusion-maximal ones.
  const std::uint32_t full = (1U << m) - 1;
  std::vector<std::uint8_t> good(std::size_t{full} + 1, 0);
  std::vector<Edge> chosen;
  for (std::uint32_t s = 1; s <= full; ++s) {
    chosen.clear();
    for (int i = 0; i < m; ++i)
      if ((s >> i) & 1U) chosen.push_back(es[static_cast<std::size_t>(i)]);
    good[s] = is_cochordal_edge_set(g, chosen) ? 1 : 0;
    if (s == full) break;
  }
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (good[s]) {
      bool is_max = true;
      for (int i = 0; i < m && is_max; ++i)
        if (!((s >> i) & 1U) && good[s | (1U << i)]) is_max = false;
      if (is_max) maximal.push_back(s);
    }
    if (s == full) break;
  }

  // Iterative deepening set cover; branch on the lowest uncovered edge.
  std::function<bool(std::uint32_t, int)> cover = [&](std::uint32_t covered, int budget) -> bool {
    if (covered == full) return true;
    if (budget == 0) return false;
    const int e = std::countr_one(covered);
    for (std::uint32_t s : maximal)
      if ((s >> e) & 1U)
        if (cover(covered | s, budget - 1)) return true;
    return false;
  };
  for (int k = 1;; ++k)
    if (cover(0, k)) return k;
}

// --- star packings ------------------------------------------------------

namespace {

// Degree-at-least-two vertices of the graph induced on `h`.
VertexSet centers_available(const Graph& g, VertexSet h) {
  VertexSet out;
  for (Vertex v : h)
    if (g.neighbors_in(v, h).size() >= 2) out.insert(v);
  return out;
}

void collect_packings(const Graph& g, VertexSet h, StarPacking& cur, std::vector<StarPacking>& out) {
  VertexSet choices = centers_available(g, h);
  if (choices.empty()) {
    StarPacking done = cur;
    done.residual_edges = g.edges_within(h);
    out.push_back(std::move(done));
    return;
  }
  for (Vertex v : choices) {
    VertexSet next = active(g, h - g.closed_neighbors(v));
    cur.centers.push_back(v);
    cur.trace.push_back(next);
    collect_packings(g, next, cur, out);
    cur.centers.pop_back();
    cur.trace.pop_back();
  }
}

}  // namespace

std::vector<StarPacking> all_star_packings(const Graph& g) {
  std::vector<StarPacking> out;
  StarPacking cur;
  collect_packings(g, active(g, g.vertices()), cur, out);
  return out;
}

ZetaResult zeta(const Graph& g) {
  struct Entry {
    int value;
    Vertex choice;  // -1 at a leaf
  };
  std::unordered_map<std::uint64_t, Entry> memo;
  std::function<int(VertexSet)> best = [&](VertexSet h) -> int {
    if (auto it = memo.find(h.bits()); it != memo.end()) return it->second.value;
    VertexSet choices = centers_available(g, h);
    Entry e{static_cast<int>(g.edges_within(h).size()), -1};
    for (Vertex v : choices) {
      int r = 1 + best(active(g, h - g.closed_neighbors(v)));
      if (e.choice < 0 || r > e.value) e = {r, v};
    }
    memo.emplace(h.bits(), e);
    return e.value;
  };

  ZetaResult res;
  VertexSet h = active(g, g.vertices());
  res.value = best(h);
  for (;;) {
    const Entry& e = memo.at(h.bits());
    if (e.choice < 0) {
      res.witness.residual_edges = g.edges_within(h);
      break;
    }
    h = active(g, h - g.closed_neighbors(e.choice));
    res.witness.centers.push_back(e.choice);
    res.witness.trace.push_back(h);
  }
  return res;
}

// --- vertex decomposability -------------------------------------------

void for_each_maximal_independent_set(const Graph& g, VertexSet within, const std::function<void(VertexSet)>& f) {
  // Bron-Kerbosch with pivoting on the complement.
  std::function<void(VertexSet, VertexSet, VertexSet)> bk = [&](VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty()) {
      if (x.empty()) f(r);
      return;
    }
    Vertex pivot = -1;
    int best = -1;
    for (Vertex u : p | x) {
      int score = (p - g.closed_neighbors(u)).size();
      if (score > best) {
        best = score;
        pivot = u;
      }
    }
    for (Vertex v : p & g.closed_neighbors(pivot)) {
      VertexSet keep = within - g.closed_neighbors(v);
      bk(r | VertexSet::of({v}), p & keep, x & keep);
      p.erase(v);
      x.insert(v);
    }
  };
  bk(VertexSet(), within, VertexSet());
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  for_each_maximal_independent_set(g, within, [&](VertexSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool shedding_within(const Graph& g, VertexSet within, Vertex x) {
  const VertexSet rest = within - VertexSet::of({x});
  const VertexSet far = within - g.closed_neighbors(x);
  bool ok = true;
  for_each_maximal_independent_set(g, rest, [&](VertexSet s) {
    if (s.is_subset_of(far)) ok = false;
  });
  return ok;
}

class Decomposer {
 public:
  explicit Decomposer(const Graph& g) : g_(g) {}

  bool vd(VertexSet h) {
    if (g_.edges_within(h).empty()) return true;
    if (auto it = memo_.find(h.bits()); it != memo_.end()) return it->second >= 0;
    Vertex found = -1;
    for (Vertex x : h) {
      if (!shedding_within(g_, h, x)) continue;
      if (vd(h - VertexSet::of({x})) && vd(h - g_.closed_neighbors(x))) {
        found = x;
        break;
      }
    }
    memo_[h.bits()] = found;
    return found >= 0;
  }

  Vertex choice(VertexSet h) const { return memo_.at(h.bits()); }

  void transcript(VertexSet h, std::vector<DecompositionStep>& steps) const {
    if (g_.edges_within(h).empty()) return;
    Vertex x = choice(h);
    steps.push_back({h, x});
    transcript(h - VertexSet::of({x}), steps);
    transcript(h - g_.closed_neighbors(x), steps);
  }

 private:
  const Graph& g_;
  std::unordered_map<std::uint64_t, Vertex> memo_;
};

void check_vd_guard(const Graph& g, bool guard_override) {
  if (g.order() > kDecomposabilityGuard && !guard_override)
    throw ResourceError("vertex decomposability is guarded at " + std::to_string(kDecomposabilityGuard) +
                        " vertices, graph has " + std::to_string(g.order()));
}

}  // namespace

bool is_shedding_vertex(const Graph& g, Vertex x) {
  g.check_vertex(x);
  return shedding_within(g, g.vertices(), x);
}

bool is_vertex_decomposable(const Graph& g, bool guard_override) {
  check_vd_guard(g, guard_override);
  Decomposer d(g);
  return d.vd(g.vertices());
}

VertexSet shedding_set(const Graph& g, bool guard_override) {
  check_vd_guard(g, guard_override);
  Decomposer d(g);
  VertexSet out;
  for (Vertex x : g.vertices())
    if (shedding_within(g, g.vertices(), x) && d.vd(g.vertices() - VertexSet::of({x}))) out.insert(x);
  return out;
}

std::optional<SheddingCertificate> vertex_decomposition(const Graph& g, bool guard_override) {
  check_vd_guard(g, guard_override);
  Decomposer d(g);
  if (!d.vd(g.vertices())) return std::nullopt;
  SheddingCertificate cert;
  d.transcript(g.vertices(), cert.steps);
  if (!cert.steps.empty()) cert.vertex = cert.steps.front().shedding;
  return cert;
}

}  // namespace edgereg
