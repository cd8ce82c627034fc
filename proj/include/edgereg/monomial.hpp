#pragma once

// Monomials and monomial ideals in a polynomial ring over named variables.
// Ideals are kept as the antichain of their minimal generators, sorted by
// degree and then by descending lexicographic exponent vector.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg {

class VariableContext {
 public:
  explicit VariableContext(std::vector<std::string> names);

  static std::shared_ptr<const VariableContext> make(std::vector<std::string> names);
  // One variable per vertex, named after the vertex.
  static std::shared_ptr<const VariableContext> for_graph(const Graph& g);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // -1 if absent.
  int index_of(const std::string& name) const;

  friend bool operator==(const VariableContext& a, const VariableContext& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using Exponent = std::uint16_t;

class Monomial {
 public:
  Monomial() = default;
  // The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }
  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool is_squarefree() const;
  // Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;
  // Squarefree support as a bit mask; variables beyond 64 are rejected.
  std::uint64_t support_mask() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  // this / gcd(this, other)
  Monomial strip(const Monomial& other) const;

  std::string to_string(const VariableContext& ctx) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

class MonomialIdeal {
 public:
  // Reduces `gens` to its minimal antichain and sorts it.
  MonomialIdeal(std::shared_ptr<const VariableContext> ctx, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::shared_ptr<const VariableContext> ctx);
  static MonomialIdeal unit(std::shared_ptr<const VariableContext> ctx);

  const std::shared_ptr<const VariableContext>& context() const { return ctx_; }
  const VariableContext& vars() const { return *ctx_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;
  bool contains(const Monomial& m) const;
  // Largest exponent of variable i over the generators.
  Exponent max_exponent(std::size_t i) const;

  std::string to_string() const;
  // {"vars":[...],"gens":[[exponents]...]}
  std::string to_json() const;
  static MonomialIdeal from_json(const std::string& text);

  // Equal variable names and equal minimal generators.
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return *a.ctx_ == *b.ctx_ && a.gens_ == b.gens_;
  }

 private:
  std::shared_ptr<const VariableContext> ctx_;
  std::vector<Monomial> gens_;
};

// Ordering used for generator lists.
bool generator_order(const Monomial& a, const Monomial& b);
// Minimal antichain of `gens` in generator order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal edge_ideal(const Graph& g);
// The product e_1 ... e_s of edge quadrics, in the graph's variables.
Monomial edge_product(const Graph& g, const EdgeMultiset& edges);
// q = 0 yields the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, int q);
// (I : m)
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

// Polarization together with its variable correspondence. Variable i of the
// polarized ring is level `level[i]` (1-based) of input variable `base[i]`.
// Level-1 variables keep the input name; level l >= 2 is named "x^(l)".
// Variables are ordered by base first, level second.
struct Polarization {
  MonomialIdeal ideal;
  std::vector<int> base;
  std::vector<int> level;
};

Polarization polarize(const MonomialIdeal& ideal);
// Inverse of polarize: collapses each shadow onto its base variable.
MonomialIdeal depolarize(const Polarization& p, std::shared_ptr<const VariableContext> base_ctx);

// Graph with one edge per generator; vertices are the support variables in
// variable order, named after them. DomainError naming the first generator
// that is not a squarefree quadric. `variable_of`, if given, receives the
// variable index of each vertex.
Graph graph_of_quadratic_ideal(const MonomialIdeal& ideal, std::vector<int>* variable_of = nullptr);

}  // namespace edgereg
