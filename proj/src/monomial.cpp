#include "edgereg/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "edgereg/error.hpp"
#include "json.hpp"

namespace edgereg {

// --- VariableContext ------------------------------------------------------

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("duplicate variable name '" + *std::adjacent_find(sorted.begin(), sorted.end()) + "'");
}

std::shared_ptr<const VariableContext> VariableContext::make(std::vector<std::string> names) {
  return std::make_shared<const VariableContext>(std::move(names));
}

std::shared_ptr<const VariableContext> VariableContext::for_graph(const Graph& g) {
  std::vector<std::string> names;
  for (Vertex v = 0; v < g.order(); ++v) names.push_back(g.name(v));
  return make(std::move(names));
}

int VariableContext::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

// --- Monomial -------------------------------------------------------------

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) out.push_back(i);
  return out;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t m = 0;
  for (std::size_t i : support()) {
    if (i >= 64) throw ResourceError("support mask needs fewer than 64 variables");
    m |= std::uint64_t{1} << i;
  }
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = static_cast<Exponent>(out.exps_[i] + other.exps_[i]);
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return out;
}

Monomial Monomial::strip(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    out.exps_[i] = static_cast<Exponent>(exps_[i] - std::min(exps_[i], other.exps_[i]));
  return out;
}

std::string Monomial::to_string(const VariableContext& ctx) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

// --- MonomialIdeal --------------------------------------------------------

bool generator_order(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), generator_order);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : kept)
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(std::shared_ptr<const VariableContext> ctx, std::vector<Monomial> gens)
    : ctx_(std::move(ctx)) {
  for (const Monomial& g : gens)
    if (g.nvars() != ctx_->size())
      throw DomainError("monomial has " + std::to_string(g.nvars()) + " exponents, ring has " +
                        std::to_string(ctx_->size()) + " variables");
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(std::shared_ptr<const VariableContext> ctx) { return MonomialIdeal(std::move(ctx), {}); }

MonomialIdeal MonomialIdeal::unit(std::shared_ptr<const VariableContext> ctx) {
  Monomial one(ctx->size());
  return MonomialIdeal(std::move(ctx), {one});
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

Exponent MonomialIdeal::max_exponent(std::size_t i) const {
  Exponent e = 0;
  for (const Monomial& g : gens_) e = std::max(e, g[i]);
  return e;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string(*ctx_);
  }
  return out + ")";
}

std::string MonomialIdeal::to_json() const {
  nlohmann::json j;
  j["vars"] = ctx_->names();
  j["gens"] = nlohmann::json::array();
  for (const Monomial& g : gens_) j["gens"].push_back(g.exponents());
  return j.dump();
}

MonomialIdeal MonomialIdeal::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.contains("vars") || !j.contains("gens")) throw ParseError("ideal JSON needs \"vars\" and \"gens\"", 0);
  auto ctx = VariableContext::make(j["vars"].get<std::vector<std::string>>());
  std::vector<Monomial> gens;
  for (const auto& g : j["gens"]) gens.emplace_back(g.get<std::vector<Exponent>>());
  return MonomialIdeal(ctx, std::move(gens));
}

// --- operations -----------------------------------------------------------

MonomialIdeal edge_ideal(const Graph& g) {
  auto ctx = VariableContext::for_graph(g);
  std::vector<Monomial> gens;
  for (const Edge& e : g.edges()) {
    std::vector<Exponent> ex(ctx->size(), 0);
    ex[static_cast<std::size_t>(e.u)] = ex[static_cast<std::size_t>(e.v)] = 1;
    gens.emplace_back(std::move(ex));
  }
  return MonomialIdeal(ctx, std::move(gens));
}

Monomial edge_product(const Graph& g, const EdgeMultiset& edges) {
  edges.validate(g);
  std::vector<Exponent> ex(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : edges.edges()) {
    ++ex[static_cast<std::size_t>(e.u)];
    ++ex[static_cast<std::size_t>(e.v)];
  }
  return Monomial(std::move(ex));
}

MonomialIdeal power(const MonomialIdeal& ideal, int q) {
  if (q < 0) throw DomainError("negative ideal power");
  if (q == 0) return MonomialIdeal::unit(ideal.context());
  std::vector<Monomial> cur = ideal.generators();
  for (int k = 2; k <= q; ++k) {
    std::vector<Monomial> next;
    next.reserve(cur.size() * ideal.size());
    for (const Monomial& a : cur)
      for (const Monomial& b : ideal.generators()) next.push_back(a * b);
    cur = minimalize(std::move(next));
  }
  return MonomialIdeal(ideal.context(), std::move(cur));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.nvars() != ideal.vars().size()) throw DomainError("colon monomial lives in a different ring");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) gens.push_back(g.strip(m));
  return MonomialIdeal(ideal.context(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.vars() == b.vars())) throw DomainError("ideals live in different rings");
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.context(), std::move(gens));
}

Polarization polarize(const MonomialIdeal& ideal) {
  const VariableContext& in = ideal.vars();
  std::vector<std::string> names;
  std::vector<int> base, level;
  std::vector<std::size_t> first(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    first[i] = names.size();
    const int levels = std::max<int>(1, ideal.max_exponent(i));
    for (int l = 1; l <= levels; ++l) {
      names.push_back(l == 1 ? in.name(i) : in.name(i) + "^(" + std::to_string(l) + ")");
      base.push_back(static_cast<int>(i));
      level.push_back(l);
    }
  }
  auto ctx = VariableContext::make(std::move(names));
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    std::vector<Exponent> ex(ctx->size(), 0);
    for (std::size_t i = 0; i < in.size(); ++i)
      for (Exponent l = 0; l < g[i]; ++l) ex[first[i] + l] = 1;
    gens.emplace_back(std::move(ex));
  }
  return Polarization{MonomialIdeal(ctx, std::move(gens)), std::move(base), std::move(level)};
}

MonomialIdeal depolarize(const Polarization& p, std::shared_ptr<const VariableContext> base_ctx) {
  std::vector<Monomial> gens;
  for (const Monomial& g : p.ideal.generators()) {
    std::vector<Exponent> ex(base_ctx->size(), 0);
    for (std::size_t i = 0; i < g.nvars(); ++i)
      ex[static_cast<std::size_t>(p.base[i])] = static_cast<Exponent>(ex[static_cast<std::size_t>(p.base[i])] + g[i]);
    gens.emplace_back(std::move(ex));
  }
  return MonomialIdeal(std::move(base_ctx), std::move(gens));
}

Graph graph_of_quadratic_ideal(const MonomialIdeal& ideal, std::vector<int>* variable_of) {
  const VariableContext& ctx = ideal.vars();
  std::vector<bool> used(ctx.size(), false);
  for (const Monomial& g : ideal.generators()) {
    if (g.degree() != 2 || !g.is_squarefree())
      throw DomainError("generator " + g.to_string(ctx) + " is not a squarefree quadric");
    for (std::size_t i : g.support()) used[i] = true;
  }
  std::vector<int> vertex_of(ctx.size(), -1);
  std::vector<std::string> names;
  std::vector<int> vars;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (used[i]) {
      vertex_of[i] = static_cast<int>(names.size());
      names.push_back(ctx.name(i));
      vars.push_back(static_cast<int>(i));
    }
  std::vector<Edge> es;
  for (const Monomial& g : ideal.generators()) {
    auto s = g.support();
    es.emplace_back(vertex_of[s[0]], vertex_of[s[1]]);
  }
  if (variable_of) *variable_of = std::move(vars);
  const int order = static_cast<int>(names.size());
  return Graph(order, es, std::move(names));
}

}  // namespace edgereg
