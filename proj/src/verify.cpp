#include "edgereg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "edgereg/error.hpp"
#include "edgereg/even_connection.hpp"
#include "edgereg/invariants.hpp"
#include "edgereg/monomial.hpp"
#include "json.hpp"

namespace edgereg {

using nlohmann::json;

// --- reports ---------------------------------------------------------------

namespace {

json parse_or_string(const std::string& text) {
  if (text.empty()) return nullptr;
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    return text;
  }
}

}  // namespace

std::string CheckReport::to_json() const {
  json j;
  j["id"] = id;
  j["statement"] = statement;
  j["family"] = family;
  j["checked"] = checked;
  j["skipped"] = skipped;
  j["violations"] = json::array();
  for (const Violation& v : violations)
    j["violations"].push_back({{"graph6", v.graph6},
                               {"params", parse_or_string(v.params)},
                               {"lhs", parse_or_string(v.lhs)},
                               {"rhs", parse_or_string(v.rhs)}});
  j["seed"] = seed;
  j["elapsed_ms"] = elapsed_ms;
  j["budget_ms"] = budget_ms;
  j["within_budget"] = elapsed_ms <= budget_ms;
  j["verdict"] = verdict;
  j["evidence"] = parse_or_string(evidence);
  return j.dump();
}

std::string CheckReport::csv_header() { return "id,family,checked,skipped,violations,seed,elapsed_ms,budget_ms,verdict"; }

std::string CheckReport::to_csv_row() const {
  std::ostringstream out;
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  out << id << ',' << quoted(family) << ',' << checked << ',' << skipped << ',' << violations.size() << ',' << seed
      << ',' << static_cast<long long>(elapsed_ms) << ',' << static_cast<long long>(budget_ms) << ',' << verdict;
  return out.str();
}

// --- caches ----------------------------------------------------------------

namespace {

std::string graph_key(const Graph& g) {
  return g.order() <= 11 ? to_graph6(canonical_form(g)) : to_graph6(g);
}

struct PowerEntry {
  Graph graph;
  int q;
  int reg;
};

std::mutex g_cache_mu;
std::map<std::tuple<std::string, int, int>, PowerEntry> g_power_cache;

int cached_power_reg(const Graph& g, int q, Field field, bool guard_override) {
  const Graph h = remove_isolated(g);
  const auto key = std::make_tuple(graph_key(h), q, static_cast<int>(field));
  {
    std::lock_guard lock(g_cache_mu);
    if (auto it = g_power_cache.find(key); it != g_power_cache.end()) return it->second.reg;
  }
  const int r = h.edge_count() == 0 ? 0 : power_regularity(h, q, field, guard_override).reg;
  std::lock_guard lock(g_cache_mu);
  g_power_cache.emplace(key, PowerEntry{h, q, r});
  return r;
}

int cached_reg(const Graph& g, Field field) { return cached_power_reg(g, 1, field, false); }

}  // namespace

std::size_t regularity_cache_size() {
  std::lock_guard lock(g_cache_mu);
  return g_power_cache.size();
}

// --- shared helpers ----------------------------------------------------------

Graph house_graph() {
  const std::vector<Edge> es{{0, 1}, {0, 4}, {1, 4}, {4, 3}, {3, 2}, {2, 1}};
  return Graph(5, es, {"t1", "t2", "t3", "t4", "t5"});
}

VertexSet reg_drop_set(const Graph& g, VertexSet* degenerate, Field field) {
  const int r = cached_reg(g, field);
  VertexSet out, flat;
  for (Vertex x : g.vertices()) {
    const Graph rest = delete_vertices(g, g.closed_neighbors(x));
    if (rest.edge_count() == 0) flat.insert(x);
    if (cached_reg(rest, field) + 1 <= r) out.insert(x);
  }
  if (degenerate) *degenerate = flat;
  return out;
}

namespace {

struct Outcome {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::vector<Violation> violations;
  json evidence = json::object();
};

void add_counts(json& into, const json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) {
    if (it->is_number_integer())
      into[it.key()] = into.value(it.key(), 0) + it->get<std::int64_t>();
    else if (it->is_array()) {
      if (!into.contains(it.key())) into[it.key()] = json::array();
      for (const auto& e : *it) into[it.key()].push_back(e);
    }
  }
}

std::string family_text(const FamilySpec& s, int nmin, int nmax, const std::string& extra) {
  if (!s.graphs.empty()) return s.source.empty() ? std::to_string(s.graphs.size()) + " given graphs" : s.source;
  std::string out = "n=" + std::to_string(nmin) + ".." + std::to_string(nmax) + ", no isolated vertices";
  if (s.connected) out += ", connected";
  if (!extra.empty()) out += ", " + extra;
  return out;
}

std::vector<Graph> family_graphs(const FamilySpec& s, int nmin, int nmax, bool no_isolated = true) {
  if (!s.graphs.empty()) return s.graphs;
  std::vector<Graph> out;
  for (int n = nmin; n <= nmax; ++n)
    for (Graph& g : enumerate_graphs(n, no_isolated, s.guard_override))
      if (!s.connected || is_connected(g)) out.push_back(std::move(g));
  return out;
}

// Runs `per_graph` on every graph, on `jobs` threads. A ResourceError marks
// the instance as skipped.
Outcome sweep(const std::vector<Graph>& graphs, int jobs, const std::function<Outcome(const Graph&)>& per_graph) {
  std::vector<Outcome> results(graphs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next++;
      if (i >= graphs.size()) return;
      try {
        results[i] = per_graph(graphs[i]);
      } catch (const ResourceError& e) {
        results[i] = Outcome{};
        results[i].skipped = 1;
        results[i].evidence["guard"] = json::array({to_graph6(graphs[i]) + ": " + e.what()});
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int n = std::max(1, jobs);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  Outcome total;
  for (Outcome& r : results) {
    total.checked += r.checked;
    total.skipped += r.skipped;
    for (Violation& v : r.violations) total.violations.push_back(std::move(v));
    add_counts(total.evidence, r.evidence);
  }
  std::sort(total.violations.begin(), total.violations.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.graph6, a.params, a.lhs, a.rhs) < std::tie(b.graph6, b.params, b.lhs, b.rhs);
  });
  return total;
}

std::string num(long long v) { return std::to_string(v); }

json edges_json(const EdgeMultiset& e) {
  json a = json::array();
  for (const Edge& x : e.edges()) a.push_back({x.u, x.v});
  return a;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Multisets of sizes 1..smax: exhaustive up to 2, then `samples` drawn per
// size (all of them if samples is 0), reproducibly from the seed.
std::vector<EdgeMultiset> multiset_family(const Graph& g, int smax, int samples, std::uint64_t seed) {
  std::vector<EdgeMultiset> out;
  for (int s = 1; s <= smax; ++s) {
    std::vector<EdgeMultiset> all = edge_multisets(g, s);
    if (s <= 2 || samples == 0 || static_cast<int>(all.size()) <= samples) {
      for (auto& m : all) out.push_back(std::move(m));
      continue;
    }
    std::mt19937_64 rng(fnv1a(to_graph6(g) + "/" + std::to_string(s), seed));
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(samples));
    for (auto& m : all) out.push_back(std::move(m));
  }
  return out;
}

struct Tier {
  int nmax;
  int qmax;
};

// Power sweeps default to n <= 6 with q <= 2 and n <= 5 with q = 3.
std::vector<Tier> power_tiers(const FamilySpec& s) {
  if (s.nmax || s.qmax || !s.graphs.empty()) return {{s.nmax.value_or(6), s.qmax.value_or(2)}};
  return {{6, 2}, {5, 3}};
}

std::string tiers_text(const std::vector<Tier>& tiers) {
  std::string out;
  for (const Tier& t : tiers) {
    if (!out.empty()) out += "; ";
    out += "n<=" + std::to_string(t.nmax) + " q<=" + std::to_string(t.qmax);
  }
  return out;
}

// Runs a per-(graph, q) body over power tiers; q = 1 included.
Outcome power_sweep(const FamilySpec& s, int qmin, const std::function<void(const Graph&, int, Outcome&)>& body) {
  const int nmin = s.nmin.value_or(2);
  Outcome total;
  int floor_q = qmin;
  for (const Tier& t : power_tiers(s)) {
    const auto graphs = family_graphs(s, nmin, t.nmax);
    const int lo = floor_q;
    Outcome o = sweep(graphs, s.jobs, [&](const Graph& g) {
      Outcome out;
      for (int q = lo; q <= t.qmax; ++q) body(g, q, out);
      return out;
    });
    total.checked += o.checked;
    total.skipped += o.skipped;
    for (auto& v : o.violations) total.violations.push_back(std::move(v));
    add_counts(total.evidence, o.evidence);
    floor_q = std::max(floor_q, t.qmax + 1);
  }
  return total;
}

json q_params(int q) { return {{"q", q}}; }

// --- checks -----------------------------------------------------------------

struct CheckDef {
  std::string id;
  std::string statement;
  double budget_ms;
  std::function<Outcome(const FamilySpec&, std::string&)> run;  // sets the family text
};

Outcome thm_4_2(const FamilySpec& s, std::string& family) {
  const int nmin = s.nmin.value_or(2), nmax = s.nmax.value_or(7);
  family = family_text(s, nmin, nmax, "");
  return sweep(family_graphs(s, nmin, nmax), s.jobs, [&](const Graph& g) {
    Outcome o;
    if (g.edge_count() == 0) {
      ++o.skipped;
      return o;
    }
    const int r = cached_reg(g, s.field), z = zeta(g).value;
    ++o.checked;
    if (r > z + 1) o.violations.push_back({to_graph6(g), "{}", num(r), num(z + 1)});
    return o;
  });
}

Outcome thm_4_5(const FamilySpec& s, std::string& family) {
  const int nmin = s.nmin.value_or(2), nmax = s.nmax.value_or(6), smax = s.smax.value_or(3);
  const int samples = s.s3_samples.value_or(3);
  family = family_text(s, nmin, nmax,
                       "s<=" + std::to_string(smax) + " (s<=2 exhaustive, " + std::to_string(samples) +
                           " sampled per larger s)");
  return sweep(family_graphs(s, nmin, nmax), s.jobs, [&](const Graph& g) {
    Outcome o;
    const int bound = zeta(g).value + 1;
    for (const EdgeMultiset& e : multiset_family(g, smax, samples, s.seed)) {
      const int r = colon_regularity(g, e, s.field, s.guard_override).reg;
      ++o.checked;
      if (r > bound) o.violations.push_back({to_graph6(g), json{{"edges", edges_json(e)}}.dump(), num(r), num(bound)});
    }
    return o;
  });
}

Outcome thm_4_6(const FamilySpec& s, std::string& family) {
  family = (s.graphs.empty() ? "no isolated vertices, " : family_text(s, 0, 0, "") + ", ") + tiers_text(power_tiers(s));
  return power_sweep(s, 1, [&](const Graph& g, int q, Outcome& o) {
    const int r = cached_power_reg(g, q, s.field, s.guard_override);
    const int bound = 2 * q + zeta(g).value - 1;
    ++o.checked;
    if (r > bound) o.violations.push_back({to_graph6(g), q_params(q).dump(), num(r), num(bound)});
  });
}

Outcome lower_bound_entries(const std::vector<PowerEntry>& entries) {
  Outcome o;
  for (const PowerEntry& e : entries) {
    if (e.graph.edge_count() == 0) continue;
    const int lhs = 2 * e.q + induced_matching_number(e.graph) - 1;
    ++o.checked;
    if (lhs > e.reg) o.violations.push_back({to_graph6(e.graph), q_params(e.q).dump(), num(lhs), num(e.reg)});
  }
  return o;
}

std::vector<PowerEntry> cache_snapshot(Field field) {
  std::lock_guard lock(g_cache_mu);
  std::vector<PowerEntry> out;
  for (const auto& [key, e] : g_power_cache)
    if (std::get<2>(key) == static_cast<int>(field)) out.push_back(e);
  return out;
}

Outcome lb_bht(const FamilySpec& s, std::string& family) {
  family = (s.graphs.empty() ? "no isolated vertices, " : family_text(s, 0, 0, "") + ", ") +
           tiers_text(power_tiers(s)) + ", plus every power regularity computed earlier in the run";
  power_sweep(s, 1, [&](const Graph& g, int q, Outcome&) { cached_power_reg(g, q, s.field, s.guard_override); });
  return lower_bound_entries(cache_snapshot(s.field));
}

bool every_induced_subgraph_drops(const Graph& g, Field field) {
  static std::mutex mu;
  static std::map<std::string, bool> memo;
  const VertexSet all = g.vertices();
  for (std::uint64_t w = 1; w <= all.bits(); ++w) {
    const Graph h = remove_isolated(induced_subgraph(g, VertexSet(w)));
    if (h.edge_count() == 0) continue;
    const std::string key = graph_key(h);
    {
      std::lock_guard lock(mu);
      if (auto it = memo.find(key); it != memo.end()) {
        if (!it->second) return false;
        continue;
      }
    }
    const bool ok = !reg_drop_set(h, nullptr, field).empty();
    {
      std::lock_guard lock(mu);
      memo.emplace(key, ok);
    }
    if (!ok) return false;
  }
  return true;
}

Outcome thm_4_8(const FamilySpec& s, std::string& family) {
  const int nmin = s.nmin.value_or(2), nmax = s.nmax.value_or(6), qmax = s.qmax.value_or(2);
  family = family_text(s, nmin, nmax, "q<=" + std::to_string(qmax) + ", hypothesis tested on every induced subgraph");
  return sweep(family_graphs(s, nmin, nmax), s.jobs, [&](const Graph& g) {
    Outcome o;
    if (!every_induced_subgraph_drops(g, s.field)) {
      ++o.skipped;
      o.evidence["hypothesis_false"] = 1;
      return o;
    }
    o.evidence["hypothesis_true"] = 1;
    const int r1 = cached_reg(g, s.field);
    for (int q = 2; q <= qmax; ++q) {
      const int r = cached_power_reg(g, q, s.field, s.guard_override);
      ++o.checked;
      if (r > 2 * q + r1 - 2) o.violations.push_back({to_graph6(g), q_params(q).dump(), num(r), num(2 * q + r1 - 2)});
    }
    return o;
  });
}

Outcome thm_5_3(const FamilySpec& s, std::string& family) {
  const int nmin = s.nmin.value_or(2), nmax = s.nmax.value_or(6), qmax = s.qmax.value_or(2);
  family = family_text(s, nmin, nmax, "vertex decomposable, q<=" + std::to_string(qmax));
  return sweep(family_graphs(s, nmin, nmax), s.jobs, [&](const Graph& g) {
    Outcome o;
    if (!is_vertex_decomposable(g, s.guard_override)) {
      ++o.skipped;
      return o;
    }
    o.evidence["vertex_decomposable"] = 1;
    const int r1 = cached_reg(g, s.field);
    for (int q = 2; q <= qmax; ++q) {
      const int r = cached_power_reg(g, q, s.field, s.guard_override);
      ++o.checked;
      if (r > 2 * q + r1 - 2) o.violations.push_back({to_graph6(g), q_params(q).dump(), num(r), num(2 * q + r1 - 2)});
    }
    return o;
  });
}

bool equality_nu(const Graph& g, int qmax, const FamilySpec& s, const std::string& cls, Outcome& o) {
  const int nu = induced_matching_number(g);
  o.evidence[cls] = 1;
  bool held = true;
  for (int q = 1; q <= qmax; ++q) {
    const int r = cached_power_reg(g, q, s.field, s.guard_override);
    ++o.checked;
    if (r != 2 * q + nu - 1) {
      held = false;
      o.violations.push_back({to_graph6(g), json{{"q", q}, {"class", cls}}.dump(), num(r), num(2 * q + nu - 1)});
    }
  }
  return held;
}

// Any cycle of length `len` as a subgraph, induced or not.
bool has_cycle_subgraph(const Graph& g, int len) {
  std::function<bool(Vertex, Vertex, VertexSet, int)> extend = [&](Vertex start, Vertex at, VertexSet used, int depth) {
    if (depth == len) return g.has_edge(at, start);
    for (Vertex w : g.neighbors(at) - used)
      if (w > start && extend(start, w, used | VertexSet::of({w}), depth + 1)) return true;
    return false;
  };
  for (Vertex v : g.vertices())
    if (extend(v, v, VertexSet::of({v}), 1)) return true;
  return false;
}

std::vector<Graph> whiskered_family(int nmax) {
  std::vector<Graph> out;
  std::vector<std::string> seen;
  for (int nh = 1; nh < nmax; ++nh)
    for (const Graph& h : enumerate_graphs(nh, false)) {
      for (std::uint64_t sm = 1; sm < (std::uint64_t{1} << nh); ++sm) {
        const VertexSet sset(sm);
        if (nh + sset.size() > nmax) continue;
        if (!is_chordal(delete_vertices(h, sset))) continue;
        const Graph g = add_whiskers(h, sset);
        if (!g.isolated_vertices().empty()) continue;
        const std::string key = graph_key(g);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        out.push_back(g);
      }
    }
  return out;
}

enum CorClass : unsigned { kChordal = 1, kC5FreeVd = 2, kWhiskered = 4, kAllClasses = 7, kC5FreeVdInduced = 8 };

// kC5FreeVd excludes every 5-cycle subgraph; kC5FreeVdInduced only induced ones.
Outcome cor_5_4_classes(const FamilySpec& s, std::string& family, unsigned classes) {
  const int nmin = s.nmin.value_or(2), nmax = s.nmax.value_or(6), qmax = s.qmax.value_or(2);
  std::string names;
  if (classes & kChordal) names = "chordal";
  if (classes & kC5FreeVd) names += std::string(names.empty() ? "" : " or ") + "vertex decomposable without a 5-cycle";
  if (classes & kC5FreeVdInduced) names += std::string(names.empty() ? "" : " or ") + "vertex decomposable without induced C5";
  const bool enumerated = classes & (kChordal | kC5FreeVd | kC5FreeVdInduced);
  const bool whiskered = (classes & kWhiskered) && s.graphs.empty();
  family.clear();
  if (enumerated) family = family_text(s, nmin, nmax, names + ", q<=" + std::to_string(qmax));
  if (whiskered)
    family += std::string(family.empty() ? "" : "; ") + "whiskered H with H\\S chordal, up to " +
              std::to_string(nmax) + " vertices, q<=" + std::to_string(qmax);
  Outcome o;
  if (enumerated)
    o = sweep(family_graphs(s, nmin, nmax), s.jobs, [&](const Graph& g) {
      Outcome out;
      if ((classes & kChordal) && is_chordal(g)) {
        equality_nu(g, qmax, s, "chordal", out);
      } else if ((classes & kC5FreeVd) && !has_cycle_subgraph(g, 5) && is_vertex_decomposable(g, s.guard_override)) {
        equality_nu(g, qmax, s, "vd_without_5_cycle", out);
      } else if ((classes & kC5FreeVdInduced) && !has_induced_cycle(g, 5) &&
                 is_vertex_decomposable(g, s.guard_override)) {
        equality_nu(g, qmax, s, "vd_without_induced_c5", out);
      } else {
        ++out.skipped;
      }
      return out;
    });
  if (whiskered) {
    Outcome w = sweep(whiskered_family(nmax), s.jobs, [&](const Graph& g) {
      Outcome out;
      equality_nu(g, qmax, s, "whiskered", out);
      return out;
    });
    o.checked += w.checked;
    for (auto& v : w.violations) o.violations.push_back(std::move(v));
    add_counts(o.evidence, w.evidence);
  }
  return o;
}

Outcome conj_1_2(const FamilySpec& s, std::string& family) {
  family = (s.graphs.empty() ? "no isolated vertices, " : family_text(s, 0, 0, "") + ", ") + tiers_text(power_tiers(s));
  return power_sweep(s, 2, [&](const Graph& g, int q, Outcome& o) {
    const int r = cached_power_reg(g, q, s.field, s.guard_override), r1 = cached_reg(g, s.field);
    ++o.checked;
    if (r > 2 * q + r1 - 2) o.violations.push_back({to_graph6(g), q_params(q).dump(), num(r), num(2 * q + r1 - 2)});
  });
}

// --- even-connection lemmas ----------------------------------------------

struct LemmaFamily {
  int nmin, nmax, smax, samples;
};

LemmaFamily lemma_family(const FamilySpec& s, std::string& family) {
  LemmaFamily f{s.nmin.value_or(2), s.nmax.value_or(6), s.smax.value_or(3), s.s3_samples.value_or(10)};
  family = family_text(s, f.nmin, f.nmax,
                       "s<=" + std::to_string(f.smax) + " (s<=2 exhaustive, " + std::to_string(f.samples) +
                           " sampled per larger s)");
  return f;
}

Outcome lemma_sweep(const FamilySpec& s, std::string& family,
                    const std::function<void(const Graph&, const EdgeMultiset&, Outcome&)>& body) {
  const LemmaFamily f = lemma_family(s, family);
  return sweep(family_graphs(s, f.nmin, f.nmax), s.jobs, [&](const Graph& g) {
    Outcome o;
    for (const EdgeMultiset& e : multiset_family(g, f.smax, f.samples, s.seed)) body(g, e, o);
    return o;
  });
}

json lemma_params(const EdgeMultiset& e, json extra) {
  extra["edges"] = edges_json(e);
  return extra;
}

json keyed_edges(const KeyedGraph& k) {
  json a = json::array();
  for (const Edge& e : k.edges()) {
    const ColonVertex x = ColonVertex::from_key(e.u), y = ColonVertex::from_key(e.v);
    a.push_back({json{x.base, x.level}, json{y.base, y.level}});
  }
  return a;
}

Outcome lem_3_2(const FamilySpec& s, std::string& family) {
  return lemma_sweep(s, family, [&](const Graph& g, const EdgeMultiset& e, Outcome& o) {
    const MonomialIdeal i = edge_ideal(g);
    const int sz = static_cast<int>(e.size());
    std::optional<MonomialIdeal> lhs;
    for (std::size_t k = 0; k < e.size(); ++k) {
      const Edge w = e[k];
      const bool whisker = g.neighbors(w.u) == VertexSet::of({w.v}) || g.neighbors(w.v) == VertexSet::of({w.u});
      if (!whisker) continue;
      if (!lhs) lhs = colon(power(i, sz + 1), edge_product(g, e));
      const EdgeMultiset rest = e.without(k);
      const MonomialIdeal rhs = colon(power(i, sz), edge_product(g, rest));
      ++o.checked;
      if (!(*lhs == rhs))
        o.violations.push_back({to_graph6(g), lemma_params(e, {{"i", k}}).dump(), json(lhs->to_string()).dump(),
                                json(rhs.to_string()).dump()});
    }
  });
}

Outcome lem_3_3(const FamilySpec& s, std::string& family) {
  return lemma_sweep(s, family, [&](const Graph& g, const EdgeMultiset& e, Outcome& o) {
    const KeyedGraph gp = colon_keyed(g, g.vertices(), e);
    for (Vertex x : g.vertices()) {
      bool meets = false;
      for (const Edge& w : e.edges()) meets = meets || w.touches(x);
      if (meets) continue;
      const KeyedGraph lhs = gp.without(VertexSet::of({ColonVertex{x, 1}.key(), ColonVertex{x, 2}.key()}));
      const KeyedGraph rhs = colon_keyed(g, g.vertices() - VertexSet::of({x}), e);
      ++o.checked;
      if (lhs.edges() != rhs.edges())
        o.violations.push_back({to_graph6(g), lemma_params(e, {{"x", x}}).dump(), keyed_edges(lhs).dump(),
                                keyed_edges(rhs).dump()});
    }
  });
}

Outcome lem_3_4(const FamilySpec& s, std::string& family) {
  return lemma_sweep(s, family, [&](const Graph& g, const EdgeMultiset& e, Outcome& o) {
    const KeyedGraph gp = colon_keyed(g, g.vertices(), e);
    auto conn = [&](Vertex a, Vertex b) {
      return a == b ? gp.has_edge(ColonVertex{a, 1}.key(), ColonVertex{a, 2}.key())
                    : gp.has_edge(ColonVertex{a, 1}.key(), ColonVertex{b, 1}.key());
    };
    for (Vertex u : g.vertices())
      for (Vertex v : g.vertices()) {
        if (v < u) continue;
        const auto c = find_even_connection(g, e, u, v);
        if (!c || c->k == 0) continue;
        for (Vertex p : c->path)
          for (Vertex w : g.vertices()) {
            if (!conn(w, p)) continue;
            ++o.checked;
            if (!conn(u, w) && !conn(v, w))
              o.violations.push_back({to_graph6(g),
                                      lemma_params(e, {{"u", u}, {"v", v}, {"w", w}, {"path", c->path}}).dump(),
                                      "false", "true"});
          }
      }
  });
}

Outcome lem_3_5(const FamilySpec& s, std::string& family) {
  return lemma_sweep(s, family, [&](const Graph& g, const EdgeMultiset& e, Outcome& o) {
    const KeyedGraph gp = colon_keyed(g, g.vertices(), e);
    for (Vertex y : g.vertices()) {
      const KeyedGraph lhs = gp.without(gp.closed_neighbors(ColonVertex{y, 1}.key()));
      const VertexSet h = g.vertices() - g.closed_neighbors(y);
      const KeyedGraph rhs = colon_keyed(g, h, e.restricted_to(h));
      ++o.checked;
      if (!is_induced_in(lhs, rhs))
        o.violations.push_back({to_graph6(g), lemma_params(e, {{"y", y}}).dump(), keyed_edges(lhs).dump(),
                                keyed_edges(rhs).dump()});
    }
  });
}

Outcome lem_3_6(const FamilySpec& s, std::string& family) {
  return lemma_sweep(s, family, [&](const Graph& g, const EdgeMultiset& e, Outcome& o) {
    const KeyedGraph gp = colon_keyed(g, g.vertices(), e);
    VertexSet support;
    for (const Edge& w : e.edges()) support |= w.ends();
    const VertexSet free = g.vertices() - support;
    // Every W between the support of the multiset and V(G).
    for (std::uint64_t sub = free.bits();; sub = (sub - 1) & free.bits()) {
      const VertexSet w = support | VertexSet(sub);
      const KeyedGraph hp = colon_keyed(g, w, e);
      ++o.checked;
      if (!is_induced_in(hp, gp))
        o.violations.push_back({to_graph6(g), lemma_params(e, {{"W", w.to_vector()}}).dump(), keyed_edges(hp).dump(),
                                keyed_edges(gp).dump()});
      if (sub == 0) break;
    }
  });
}

Outcome lem_3_7(const FamilySpec& s, std::string& family) {
  return lemma_sweep(s, family, [&](const Graph& g, const EdgeMultiset& e, Outcome& o) {
    const KeyedGraph gp = colon_keyed(g, g.vertices(), e);
    std::vector<Edge> pivots;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0 && e[i] == e[i - 1]) continue;
      for (Vertex y : {e[i].u, e[i].v}) {
        const NeighborClassification c = classify_neighbors(g, e, i, y);
        VertexSet x1keys;
        for (const ColonVertex& u : c.x1) x1keys.insert(u.key());
        const KeyedGraph g1 = gp.without(x1keys);
        auto check = [&](const ColonVertex& u, int clause) {
          if (u.level != 1) {
            o.evidence["shadow_members_not_tested"] = o.evidence.value("shadow_members_not_tested", 0) + 1;
            return;
          }
          const VertexSet keep = g.vertices() - closed_nbhd(g, VertexSet::of({u.base, c.x}));
          const KeyedGraph target = colon_keyed(g, keep, e.restricted_to(keep));
          const KeyedGraph lhs = clause == 1 ? gp.without(gp.closed_neighbors(u.key()))
                                             : g1.without(g1.closed_neighbors(u.key()));
          ++o.checked;
          if (!is_induced_in(lhs, target))
            o.violations.push_back(
                {to_graph6(g),
                 lemma_params(e, {{"i", i}, {"y", y}, {"u", u.base}, {"part", clause}}).dump(),
                 keyed_edges(lhs).dump(), keyed_edges(target).dump()});
        };
        for (const ColonVertex& u : c.x1) check(u, 1);
        for (const ColonVertex& u : c.x2) check(u, 2);
        o.evidence["x1_members"] = o.evidence.value("x1_members", 0) + static_cast<int>(c.x1.size());
        o.evidence["x2_members"] = o.evidence.value("x2_members", 0) + static_cast<int>(c.x2.size());
        for (const ColonVertex& u : c.x1)
          if (std::find(c.x2.begin(), c.x2.end(), u) != c.x2.end())
            o.violations.push_back({to_graph6(g), lemma_params(e, {{"i", i}, {"y", y}, {"u", u.base}}).dump(),
                                    "\"in X1 and X2\"", "\"disjoint\""});
      }
    }
  });
}

// --- fixed fixtures ---------------------------------------------------------

Violation claim(const std::string& graph6, const std::string& what, const json& got, const json& want) {
  return {graph6, json{{"claim", what}}.dump(), got.dump(), want.dump()};
}

Outcome enum_5(const FamilySpec& s, std::string& family) {
  family = "all graphs on 5 vertices without isolated vertices";
  Outcome o;
  const auto graphs = enumerate_graphs(5, true);
  std::vector<Graph> vd, vd_edge_outside_s, edge_outside_p;
  for (const Graph& g : graphs) {
    const VertexSet p = reg_drop_set(g, nullptr, s.field);
    if (delete_vertices(g, p).edge_count() > 0) edge_outside_p.push_back(g);
    if (!is_vertex_decomposable(g)) continue;
    vd.push_back(g);
    if (delete_vertices(g, shedding_set(g)).edge_count() > 0) vd_edge_outside_s.push_back(g);
  }
  auto list = [](const std::vector<Graph>& gs) {
    json a = json::array();
    for (const Graph& g : gs) a.push_back(to_graph6(g));
    return a;
  };
  o.evidence = {{"graphs", graphs.size()},
                {"vertex_decomposable", vd.size()},
                {"vd_with_edge_outside_S", list(vd_edge_outside_s)},
                {"with_edge_outside_P", list(edge_outside_p)}};

  o.checked += 4;
  if (graphs.size() != 23) o.violations.push_back(claim("", "graph count", graphs.size(), 23));
  if (vd.size() != 20) o.violations.push_back(claim("", "vertex decomposable count", vd.size(), 20));
  if (vd_edge_outside_s.size() != 2)
    o.violations.push_back(claim("", "vertex decomposable graphs with an edge outside S(G)", vd_edge_outside_s.size(), 2));
  if (edge_outside_p.size() != 1 || !are_isomorphic(edge_outside_p.front(), house_graph()))
    o.violations.push_back(claim("", "graphs with an edge outside P(G) are exactly the house", list(edge_outside_p),
                                 json::array({to_graph6(house_graph())})));

  // The two graphs pictured with their shedding vertices: the house and C4
  // with a pendant.
  const std::vector<Edge> c4p{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}};
  const std::vector<Graph> pictured{house_graph(), Graph(5, c4p)};
  for (const Graph& want : pictured) {
    ++o.checked;
    const bool found = std::any_of(vd_edge_outside_s.begin(), vd_edge_outside_s.end(),
                                   [&](const Graph& g) { return are_isomorphic(g, want); });
    if (!found) o.violations.push_back(claim(to_graph6(want), "pictured graph has an edge outside S(G)", false, true));
  }
  // For those graphs (I^2 : e) = I for every edge e outside S(G).
  for (const Graph& g : vd_edge_outside_s) {
    const MonomialIdeal i = edge_ideal(g);
    const VertexSet sset = shedding_set(g);
    for (const Edge& e : g.edges()) {
      if (sset.contains(e.u) || sset.contains(e.v)) continue;
      ++o.checked;
      const MonomialIdeal c = colon(power(i, 2), edge_product(g, EdgeMultiset({e})));
      if (!(c == i))
        o.violations.push_back(claim(to_graph6(g), "(I^2 : e) = I", c.to_string(), i.to_string()));
    }
  }
  return o;
}

Outcome house_colon(const FamilySpec& s, std::string& family) {
  family = "house graph t1..t5";
  Outcome o;
  const Graph h = house_graph();
  const std::string g6 = to_graph6(h);
  const int r = cached_reg(h, s.field);
  ++o.checked;
  if (r != 2) o.violations.push_back(claim(g6, "reg(I(G)) = 2", r, 2));

  VertexSet degenerate;
  const VertexSet p = reg_drop_set(h, &degenerate, s.field);
  json names = json::array();
  for (Vertex v : p) names.push_back(h.name(v));
  ++o.checked;
  if (p != VertexSet::of({1, 4})) o.violations.push_back(claim(g6, "P(G) = {t2, t5}", names, json::array({"t2", "t5"})));

  const MonomialIdeal i = edge_ideal(h);
  const EdgeMultiset e({Edge(2, 3)});
  const MonomialIdeal c = colon(power(i, 2), edge_product(h, e));
  ++o.checked;
  if (!(c == i)) o.violations.push_back(claim(g6, "(I(G)^2 : t3 t4) = I(G)", c.to_string(), i.to_string()));
  ++o.checked;
  if (!(colon_graph(h, e).graph == h)) o.violations.push_back(claim(g6, "G' = G", false, true));
  o.evidence = {{"reg", r}, {"P", names}, {"colon", c.to_string()}};
  return o;
}

// --- cross-oracles -------------------------------------------------------

Outcome thm_2_3(const FamilySpec& s, std::string& family) {
  const int nmin = s.nmin.value_or(2), nmax = s.nmax.value_or(6), smax = s.smax.value_or(3);
  const int samples = s.s3_samples.value_or(0);
  family = family_text(s, nmin, nmax,
                       "s<=" + std::to_string(smax) + (samples == 0 ? " exhaustive"
                                                                    : " (s<=2 exhaustive, " + std::to_string(samples) +
                                                                          " sampled per larger s)"));
  return sweep(family_graphs(s, nmin, nmax), s.jobs, [&](const Graph& g) {
    Outcome o;
    const MonomialIdeal i = edge_ideal(g);
    std::vector<MonomialIdeal> powers{MonomialIdeal::unit(i.context()), i};
    for (const EdgeMultiset& e : multiset_family(g, smax, samples, s.seed)) {
      while (powers.size() <= e.size() + 1) powers.push_back(power(i, static_cast<int>(powers.size())));
      const MonomialIdeal c = colon(powers[e.size() + 1], edge_product(g, e));
      const MonomialIdeal oracle = polarize(c).ideal;
      const MonomialIdeal mine = edge_ideal(colon_graph(g, e).graph);
      ++o.checked;
      bool quadratic = true;
      for (const Monomial& m : c.generators()) quadratic = quadratic && m.degree() == 2;
      if (!(mine == oracle) || !quadratic)
        o.violations.push_back({to_graph6(g), lemma_params(e, json::object()).dump(), json(mine.to_string()).dump(),
                                json(oracle.to_string()).dump()});
    }
    return o;
  });
}

Outcome froberg(const FamilySpec& s, std::string& family) {
  const int nmin = s.nmin.value_or(2), nmax = s.nmax.value_or(6);
  family = s.graphs.empty() ? "n=" + std::to_string(nmin) + ".." + std::to_string(nmax) + ", at least one edge"
                            : family_text(s, nmin, nmax, "");
  return sweep(family_graphs(s, nmin, nmax, false), s.jobs, [&](const Graph& g) {
    Outcome o;
    if (g.edge_count() == 0) return o;
    const int r = edge_regularity(g, s.field).reg;
    const bool cochordal = is_chordal(complement(g));
    ++o.checked;
    if ((r == 2) != cochordal) o.violations.push_back({to_graph6(g), "{}", num(r), cochordal ? "true" : "false"});
    return o;
  });
}

// Components that are all cycles: returns their lengths, else empty.
std::vector<int> cycle_lengths(const Graph& g) {
  std::vector<int> out;
  for (VertexSet c : connected_components(g)) {
    const Graph h = induced_subgraph(g, c);
    if (h.order() < 3 || h.edge_count() != static_cast<std::size_t>(h.order())) return {};
    for (Vertex v : h.vertices())
      if (h.degree(v) != 2) return {};
    out.push_back(h.order());
  }
  return out;
}

Outcome prop_4_7(const FamilySpec& s, std::string& family) {
  struct Instance {
    Graph g;
    int qmax;
  };
  std::vector<Instance> instances;
  if (!s.graphs.empty()) {
    family = family_text(s, 0, 0, "");
    for (const Graph& g : s.graphs) instances.push_back({g, s.qmax.value_or(2)});
  } else {
    family = "disjoint unions of cycles: C3,C4,C6,C7 (q<=2); C3+C4, C5+C3, C5+C4 (q<=2); C5+C7 (q<=2, q=2 needs "
             "the guard override); C8+C3, C5+C5+C3 (q=1)";
    for (int n : {3, 4, 6, 7}) instances.push_back({cycle(n), 2});
    instances.push_back({disjoint_union(cycle(3), cycle(4)), 2});
    instances.push_back({disjoint_union(cycle(5), cycle(3)), 2});
    instances.push_back({disjoint_union(cycle(5), cycle(4)), 2});
    instances.push_back({disjoint_union(cycle(5), cycle(7)), 2});
    instances.push_back({disjoint_union(cycle(8), cycle(3)), 1});
    instances.push_back({disjoint_union(disjoint_union(cycle(5), cycle(5)), cycle(3)), 1});
  }
  if (s.qmax)
    for (auto& in : instances) in.qmax = *s.qmax;
  Outcome o;
  for (const Instance& in : instances) {
    const std::string g6 = to_graph6(in.g);
    const std::vector<int> lengths = cycle_lengths(in.g);
    int p = 0, r = static_cast<int>(lengths.size()), floor_sum = 0;
    for (int n : lengths) {
      p += n % 3 == 2 ? 1 : 0;
      floor_sum += n / 3;
    }
    if (lengths.empty() || r <= p) {
      ++o.skipped;
      o.evidence["outside_hypothesis"] = o.evidence.value("outside_hypothesis", json::array());
      o.evidence["outside_hypothesis"].push_back(g6);
      continue;
    }
    const int z = zeta(in.g).value;
    ++o.checked;
    if (z != p + floor_sum) o.violations.push_back(claim(g6, "zeta = p + sum floor(n_i/3)", z, p + floor_sum));
    for (int q = 1; q <= in.qmax; ++q) {
      try {
        const int reg = cached_power_reg(in.g, q, s.field, s.guard_override);
        ++o.checked;
        if (reg != 2 * q + z - 1) o.violations.push_back({g6, q_params(q).dump(), num(reg), num(2 * q + z - 1)});
      } catch (const ResourceError& e) {
        ++o.skipped;
        if (!o.evidence.contains("guard")) o.evidence["guard"] = json::array();
        o.evidence["guard"].push_back(g6 + " q=" + std::to_string(q) + ": " + e.what());
      }
    }
  }
  return o;
}

Outcome q_4_10(const FamilySpec& s, std::string& family) {
  const int nmin = s.nmin.value_or(2), nmax = s.nmax.value_or(6);
  FamilySpec spec = s;
  if (s.graphs.empty()) spec.connected = true;
  family = family_text(spec, nmin, nmax, "");
  return sweep(family_graphs(spec, nmin, nmax), s.jobs, [&](const Graph& g) {
    Outcome o;
    const MonomialIdeal i = edge_ideal(g);
    const int r = cached_reg(g, s.field);
    int best = -1;
    json witness = nullptr;
    for (Vertex x : g.vertices()) {
      std::vector<Exponent> ex(static_cast<std::size_t>(g.order()), 0);
      ex[static_cast<std::size_t>(x)] = 1;
      const int rc = regularity(colon(i, Monomial(ex)), s.field, s.guard_override).reg;
      if (best < 0 || rc < best) best = rc;
      if (rc + 1 <= r && witness.is_null()) witness = g.name(x);
    }
    ++o.checked;
    if (witness.is_null())
      o.violations.push_back({to_graph6(g), "{}", num(best + 1), num(r)});
    else
      o.evidence["with_vertex"] = 1;
    return o;
  });
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"thm-4.2", "reg(I(G)) <= zeta(G) + 1", 120e3, thm_4_2},
      {"thm-4.5", "reg(I(G)^{s+1} : e_1...e_s) <= zeta(G) + 1", 900e3, thm_4_5},
      {"thm-4.6", "reg(I(G)^q) <= 2q + zeta(G) - 1", 600e3, thm_4_6},
      {"lb-bht", "2q + nu(G) - 1 <= reg(I(G)^q)", 600e3, lb_bht},
      {"thm-4.8", "every induced H has x with reg(I(H \\ N_H[x])) + 1 <= reg(I(H)) => reg(I(G)^q) <= 2q + reg(I(G)) - 2",
       600e3, thm_4_8},
      {"thm-5.3", "G vertex decomposable => reg(I(G)^q) <= 2q + reg(I(G)) - 2", 600e3, thm_5_3},
      {"cor-5.4", "chordal, 5-cycle-free vertex decomposable or whiskered G => reg(I(G)^q) = 2q + nu(G) - 1", 600e3,
       [](const FamilySpec& s, std::string& f) { return cor_5_4_classes(s, f, kAllClasses); }},
      {"cor-5.4-chordal", "G chordal => reg(I(G)^q) = 2q + nu(G) - 1", 600e3,
       [](const FamilySpec& s, std::string& f) { return cor_5_4_classes(s, f, kChordal); }},
      {"cor-5.4-c5free-vd", "G vertex decomposable without a 5-cycle => reg(I(G)^q) = 2q + nu(G) - 1", 600e3,
       [](const FamilySpec& s, std::string& f) { return cor_5_4_classes(s, f, kC5FreeVd); }},
      {"cor-5.4-c5free-vd-induced", "G vertex decomposable without induced C5 => reg(I(G)^q) = 2q + nu(G) - 1", 600e3,
       [](const FamilySpec& s, std::string& f) { return cor_5_4_classes(s, f, kC5FreeVdInduced); }},
      {"cor-5.4-whiskered", "G = H with whiskers on S, H \\ S chordal => reg(I(G)^q) = 2q + nu(G) - 1", 600e3,
       [](const FamilySpec& s, std::string& f) { return cor_5_4_classes(s, f, kWhiskered); }},
      {"conj-1.2", "reg(I(G)^q) <= 2q + reg(I(G)) - 2", 600e3, conj_1_2},
      {"prop-4.7", "union of cycles with r > p => reg(I(H)^q) = 2q + zeta(H) - 1", 600e3, prop_4_7},
      {"lem-3.2", "N_G(x) = {y}, e_i = xy => (I^{s+1} : e_1...e_s) = (I^s : prod_{j != i} e_j)", 600e3, lem_3_2},
      {"lem-3.3", "x meets no e_i => I(G' \\ x) = I((G \\ x)')", 600e3, lem_3_3},
      {"lem-3.4", "wp_i in E(G') => uw in E(G') or vw in E(G')", 600e3, lem_3_4},
      {"lem-3.5", "G' \\ N_{G'}[y] is an induced subgraph of (G \\ N_G[y])'", 600e3, lem_3_5},
      {"lem-3.6", "H induced in G, e_i in E(H) => H' induced in G'", 900e3, lem_3_6},
      {"lem-3.7", "u in X_1 (X_2) => G' \\ N_{G'}[u] (G'_1 \\ N_{G'_1}[u]) induced in (G \\ N_G[u,x])'", 900e3, lem_3_7},
      {"enum-5", "23 graphs, 20 vertex decomposable, P(G) and S(G) exceptions on 5 vertices", 10e3, enum_5},
      {"house-colon", "house: reg = 2, P = {t2, t5}, (I^2 : t3 t4) = I", 5e3, house_colon},
      {"thm-2.3", "I(G') = polarization of (I(G)^{s+1} : e_1...e_s), generated in degree 2", 1800e3, thm_2_3},
      {"froberg", "reg(I(G)) = 2 <=> complement of G chordal", 120e3, froberg},
      {"q-4.10", "some x has reg(I(G) : x) + 1 <= reg(I(G))", 600e3, q_4_10},
  };
  return defs;
}

CheckReport finish(const CheckDef& def, const FamilySpec& spec, Outcome o, const std::string& family,
                   std::chrono::steady_clock::time_point start) {
  CheckReport r;
  r.id = def.id;
  r.statement = def.statement;
  r.family = family;
  r.checked = o.checked;
  r.skipped = o.skipped;
  r.violations = std::move(o.violations);
  r.seed = spec.seed;
  r.budget_ms = def.budget_ms;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.evidence = o.evidence.dump();
  if (def.id == "q-4.10")
    r.verdict = "evidence";
  else if (!r.violations.empty())
    r.verdict = "violated";
  else if (r.checked == 0 && r.skipped > 0)
    r.verdict = "skipped-guard";
  else
    r.verdict = "holds";
  return r;
}

}  // namespace

std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const CheckDef& d : registry()) out.push_back(d.id);
  return out;
}

bool is_check_id(const std::string& id) {
  const auto ids = check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

CheckReport run_check(const std::string& id, const FamilySpec& spec) {
  for (const CheckDef& def : registry()) {
    if (def.id != id) continue;
    const auto start = std::chrono::steady_clock::now();
    std::string family;
    Outcome o = def.run(spec, family);
    return finish(def, spec, std::move(o), family, start);
  }
  std::string valid;
  for (const std::string& v : check_ids()) valid += (valid.empty() ? "" : ", ") + v;
  throw UsageError("unknown check id '" + id + "'; valid ids: " + valid);
}

CheckReport search_question(const FamilySpec& spec) { return run_check("q-4.10", spec); }

CheckReport lower_bound_over_cache() {
  const auto start = std::chrono::steady_clock::now();
  const CheckDef& def = *std::find_if(registry().begin(), registry().end(), [](const CheckDef& d) { return d.id == "lb-bht"; });
  Outcome o = lower_bound_entries(cache_snapshot(Field::QQ));
  return finish(def, FamilySpec{}, std::move(o), "every power regularity computed in this process", start);
}

}  // namespace edgereg
