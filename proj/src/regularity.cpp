#include <algorithm>
#include <bit>
#include <unordered_set>

#include "edgereg/error.hpp"
#include "edgereg/regularity.hpp"
#include "json.hpp"

namespace edgereg {

std::string RegularityReport::to_json() const {
  nlohmann::json j;
  j["reg"] = reg;
  j["reg_mod"] = reg_mod;
  j["witness"] = {{"W", witness}, {"dim", witness_dim}};
  j["field"] = edgereg::to_string(field);
  j["degenerate"] = degenerate;
  return j.dump();
}

namespace {

RegularityReport degenerate_report(Field field) {
  RegularityReport r;
  r.field = field;
  r.degenerate = true;
  return r;
}

// Increasing size, then lexicographic on the sorted member lists.
bool lattice_order(Face a, Face b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  const Face d = a ^ b;
  return (a & d & (~d + 1)) != 0;
}

std::vector<Face> lcm_lattice(const std::vector<Face>& gens) {
  std::unordered_set<Face> seen(gens.begin(), gens.end());
  std::vector<Face> all(seen.begin(), seen.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (Face g : gens) {
      const Face u = all[i] | g;
      if (seen.insert(u).second) all.push_back(u);
    }
  std::sort(all.begin(), all.end(), lattice_order);
  return all;
}

}  // namespace

RegularityReport regularity_squarefree(const MonomialIdeal& ideal, Field field, bool guard_override) {
  if (ideal.is_zero() || ideal.is_unit()) return degenerate_report(field);
  if (!ideal.is_squarefree())
    throw DomainError("ideal " + ideal.to_string() + " is not squarefree; use regularity() to polarize it first");

  const VariableContext& ctx = ideal.vars();
  std::vector<int> compact(ctx.size(), -1);
  std::vector<std::size_t> original;
  for (const Monomial& g : ideal.generators())
    for (std::size_t i : g.support())
      if (compact[i] < 0) compact[i] = 0;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (compact[i] == 0) {
      compact[i] = static_cast<int>(original.size());
      original.push_back(i);
    }
  const int m = static_cast<int>(original.size());
  if (m > kRegularityGuard && !guard_override)
    throw ResourceError("regularity is guarded at " + std::to_string(kRegularityGuard) + " variables, ideal has " +
                        std::to_string(m));
  if (m > 32) throw ResourceError("regularity cannot handle more than 32 variables");

  std::vector<Face> gens;
  for (const Monomial& g : ideal.generators()) {
    Face f = 0;
    for (std::size_t i : g.support()) f |= Face{1} << compact[i];
    gens.push_back(f);
  }

  RegularityReport r;
  r.field = field;
  r.variables = m;
  int best = -1;
  Face witness = 0;
  for (Face w : lcm_lattice(gens)) {
    // The reduced homology of a restriction to w vanishes above dimension
    // |w| - 2, so w cannot beat a value of at least |w|.
    if (std::popcount(w) <= best) continue;
    const auto ranks = reduced_homology_ranks_of_nonfaces(w, gens, field);
    for (int i = static_cast<int>(ranks.size()) - 1; i >= 0; --i)
      if (ranks[static_cast<std::size_t>(i)] != 0) {
        const int value = i + 1;  // index i is dimension i - 1
        if (value > best) {
          best = value;
          witness = w;
          r.witness_dim = i - 1;
        }
        break;
      }
  }
  r.reg = best;
  r.reg_mod = best - 1;
  for (Face rest = witness; rest; rest &= rest - 1)
    r.witness.push_back(ctx.name(original[static_cast<std::size_t>(std::countr_zero(rest))]));
  return r;
}

RegularityReport regularity(const MonomialIdeal& ideal, Field field, bool guard_override) {
  if (ideal.is_zero() || ideal.is_unit()) return degenerate_report(field);
  if (ideal.is_squarefree()) return regularity_squarefree(ideal, field, guard_override);
  const Polarization p = polarize(ideal);
  try {
    return regularity_squarefree(p.ideal, field, guard_override);
  } catch (const ResourceError& e) {
    throw ResourceError(std::string("polarization: ") + e.what());
  }
}

RegularityReport edge_regularity(const Graph& g, Field field) { return regularity_squarefree(edge_ideal(g), field); }

RegularityReport power_regularity(const Graph& g, int q, Field field, bool guard_override) {
  if (q < 1) throw DomainError("power must be at least 1");
  return regularity(power(edge_ideal(g), q), field, guard_override);
}

RegularityReport colon_regularity(const Graph& g, const EdgeMultiset& edges, Field field, bool guard_override) {
  const ColonGraph cg = colon_graph(g, edges);
  return regularity_squarefree(edge_ideal(cg.graph), field, guard_override);
}

RegularityReport colon_regularity_monomial(const Graph& g, const EdgeMultiset& edges, Field field,
                                           bool guard_override) {
  const MonomialIdeal i = edge_ideal(g);
  const MonomialIdeal c = colon(power(i, static_cast<int>(edges.size()) + 1), edge_product(g, edges));
  return regularity(c, field, guard_override);
}

std::vector<EdgeMultiset> edge_multisets(const Graph& g, int size) {
  const std::vector<Edge> es = g.edges();
  std::vector<EdgeMultiset> out;
  if (size < 0) return out;
  if (size == 0) return {EdgeMultiset()};
  if (es.empty()) return out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(size), 0);
  for (;;) {
    std::vector<Edge> pick;
    for (std::size_t i : idx) pick.push_back(es[i]);
    out.emplace_back(std::move(pick));
    int pos = size - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == es.size()) --pos;
    if (pos < 0) break;
    const std::size_t next = idx[static_cast<std::size_t>(pos)] + 1;
    for (auto p = static_cast<std::size_t>(pos); p < idx.size(); ++p) idx[p] = next;
  }
  return out;
}

int banerjee_bound(const Graph& g, int q, Field field, bool guard_override) {
  if (q < 2) throw DomainError("the recursion needs q >= 2");
  int bound = power_regularity(g, q - 1, field, guard_override).reg;
  for (const EdgeMultiset& m : edge_multisets(g, q - 1))
    bound = std::max(bound, colon_regularity(g, m, field, guard_override).reg + 2 * (q - 1));
  return bound;
}

}  // namespace edgereg
