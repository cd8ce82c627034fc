#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "edgereg/error.hpp"
#include "edgereg/graph.hpp"

namespace edgereg {

namespace {

constexpr int kCanonicalLimit = 11;  // n(n-1)/2 bits must fit in 64

int pair_bits(int n) { return n * (n - 1) / 2; }

// Branch and bound over relabellings. Position k of the new labelling is
// fixed at depth k; after that the first k(k+1)/2 code bits are known, so a
// partial code whose prefix exceeds the incumbent is cut. Unused vertices
// that are twins of each other give identical subtrees, so only one per twin
// class is expanded.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), total_(pair_bits(n_)), perm_(n_, 0) {}

  void run() {
    if (n_ == 0) {
      best_ = 0;
      found_ = true;
      return;
    }
    descend(0, VertexSet(), 0);
  }

  std::uint64_t code() const { return best_; }
  const std::vector<Vertex>& perm() const { return best_perm_; }

 private:
  bool twins(Vertex a, Vertex b) const {
    VertexSet na = g_.neighbors(a), nb = g_.neighbors(b);
    na.erase(b);
    nb.erase(a);
    return na == nb;
  }

  void descend(int k, VertexSet used, std::uint64_t partial) {
    if (k == n_) {
      if (!found_ || partial < best_) {
        best_ = partial;
        best_perm_ = perm_;
        found_ = true;
      }
      return;
    }
    const int known = pair_bits(k + 1);
    const VertexSet left = g_.vertices() - used;
    std::vector<Vertex> tried;
    for (Vertex c : left) {
      bool redundant = false;
      for (Vertex t : tried)
        if (twins(t, c)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried.push_back(c);

      std::uint64_t next = partial;
      for (int i = 0; i < k; ++i)
        if (g_.has_edge(perm_[static_cast<std::size_t>(i)], c)) {
          const int idx = pair_bits(k) + i;
          next |= std::uint64_t{1} << (total_ - 1 - idx);
        }
      if (found_ && known > 0) {
        const int shift = total_ - known;
        if ((next >> shift) > (best_ >> shift)) continue;
      }
      perm_[static_cast<std::size_t>(k)] = c;
      descend(k + 1, used | VertexSet::of({c}), next);
    }
  }

  const Graph& g_;
  int n_;
  int total_;
  std::vector<Vertex> perm_;
  std::vector<Vertex> best_perm_;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

void check_canonical_size(const Graph& g) {
  if (g.order() > kCanonicalLimit)
    throw ResourceError("canonical labelling is limited to " + std::to_string(kCanonicalLimit) + " vertices");
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  check_canonical_size(g);
  const int total = pair_bits(g.order());
  std::uint64_t code = 0;
  int idx = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if (g.has_edge(i, j)) code |= std::uint64_t{1} << (total - 1 - idx);
  return code;
}

std::uint64_t canonical_code(const Graph& g) {
  check_canonical_size(g);
  CanonicalSearch s(g);
  s.run();
  return s.code();
}

Graph canonical_form(const Graph& g) {
  check_canonical_size(g);
  CanonicalSearch s(g);
  s.run();
  return relabel(Graph(g.order(), g.edges()), s.perm());
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b);
}

namespace {

// Canonical representatives on n vertices, keyed by edge count then code.
std::vector<Graph> generate_all(int n) {
  const int total = pair_bits(n);
  std::set<std::uint64_t> level{canonical_code(Graph(n))};
  std::vector<Graph> out;
  auto decode = [&](std::uint64_t code) {
    std::vector<Edge> es;
    int idx = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++idx)
        if ((code >> (total - 1 - idx)) & 1) es.emplace_back(i, j);
    return Graph(n, es);
  };
  for (int m = 0; m <= total; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      Graph g = decode(code);
      out.push_back(g);
      if (m == total) continue;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
          if (!g.has_edge(i, j)) next.insert(canonical_code(g.with_edge(i, j)));
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool no_isolated, bool guard_override) {
  if (n < 0) throw DomainError("vertex count must be non-negative");
  if (n > kEnumerationGuard && !guard_override)
    throw ResourceError("enumeration is guarded at n <= " + std::to_string(kEnumerationGuard) +
                        "; pass the guard override to go further");
  if (n > kCanonicalLimit) throw ResourceError("enumeration is impossible beyond 11 vertices");

  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::vector<Graph> all;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, generate_all(n)).first;
    all = it->second;
  }
  if (!no_isolated) return all;
  std::vector<Graph> out;
  for (Graph& g : all)
    if (g.isolated_vertices().empty()) out.push_back(std::move(g));
  return out;
}

}  // namespace edgereg
