#pragma once

// Named, reproducible checks over families of small graphs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgereg/graph.hpp"
#include "edgereg/regularity.hpp"

namespace edgereg {

// Which instances a check runs on. Unset fields take the check's defaults.
struct FamilySpec {
  std::optional<int> nmin, nmax;
  std::optional<int> qmax;
  std::optional<int> smax;
  std::optional<int> s3_samples;  // sampled 3-multisets per graph
  std::uint64_t seed = 1;
  bool connected = false;
  std::vector<Graph> graphs;      // explicit instances replace enumeration
  std::string source;             // description of explicit instances
  Field field = Field::QQ;
  bool guard_override = false;
  int jobs = 1;
};

// Every value is JSON text.
struct Violation {
  std::string graph6;
  std::string params;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string id;
  std::string statement;  // the inequality or identity being checked
  std::string family;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;   // instances outside a hypothesis or a guard
  std::vector<Violation> violations;
  std::uint64_t seed = 0;
  double elapsed_ms = 0;
  double budget_ms = 0;
  std::string verdict;         // holds | violated | evidence | over-budget
  std::string evidence;        // JSON text, check specific

  std::string to_json() const;
  std::string to_csv_row() const;
  static std::string csv_header();
};

std::vector<std::string> check_ids();
bool is_check_id(const std::string& id);

// UsageError for an unknown id listing the valid ones.
CheckReport run_check(const std::string& id, const FamilySpec& spec = {});

// P(G) = {x : reg(I(G \ N[x])) + 1 <= reg(I(G))}, with the zero ideal given
// regularity 0. `degenerate` receives the x for which G \ N[x] has no edge.
VertexSet reg_drop_set(const Graph& g, VertexSet* degenerate = nullptr, Field field = Field::QQ);

// Graphs with no vertex x satisfying reg(I(G) : x) + 1 <= reg(I(G)); run as
// check id "q-4.10".
CheckReport search_question(const FamilySpec& spec = {});

// The house graph on t1, ..., t5.
Graph house_graph();

// Number of regularity values held by the in-process cache.
std::size_t regularity_cache_size();
// lb-bht over every power regularity cached so far.
CheckReport lower_bound_over_cache();

}  // namespace edgereg
