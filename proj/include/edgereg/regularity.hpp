#pragma once

// Simplicial complexes, exact reduced homology and Castelnuovo-Mumford
// regularity of monomial ideals. Regularity is that of the ideal, so
// reg(I) = reg(R/I) + 1.

#include <cstdint>
#include <string>
#include <vector>

#include "edgereg/even_connection.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/monomial.hpp"

namespace edgereg {

enum class Field { QQ, GFp };
inline constexpr std::uint32_t kPrime = 32003;

std::string to_string(Field f);
// "qq" / "QQ" or "gfp" / "GFp"; UsageError otherwise.
Field parse_field(const std::string& text);

inline constexpr int kHomologyGuard = 24;
inline constexpr int kRegularityGuard = 20;

using Face = std::uint32_t;

// A complex on ground set {0, ..., ground-1}, stored by its facets. No
// facets at all is the void complex; the single facet 0 is {empty set}.
class SimplicialComplex {
 public:
  SimplicialComplex(int ground, std::vector<Face> facets);

  int ground() const { return ground_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool contains(Face f) const;
  // -2 for the void complex, -1 for {empty set}.
  int dimension() const;
  // All faces, by size then value.
  std::vector<Face> faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int ground_;
  std::vector<Face> facets_;  // antichain, sorted
};

// Facets are the maximal independent sets. Ground set size must be <= 32.
SimplicialComplex independence_complex(const Graph& g);
// DomainError if f is not a face.
SimplicialComplex link(const SimplicialComplex& d, Face f);
// Faces contained in w; the ground set is unchanged.
SimplicialComplex restrict(const SimplicialComplex& d, Face w);

// Entry i is the rank of reduced homology in dimension i - 1, for dimensions
// -1 ... max(dim, -1). Empty for the void complex. ResourceError when the
// ground set exceeds kHomologyGuard.
std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& d, Field field = Field::QQ);

// The same, for the complex on `ground` whose minimal non-faces are
// `nonfaces`.
std::vector<std::int64_t> reduced_homology_ranks_of_nonfaces(Face ground, const std::vector<Face>& nonfaces,
                                                             Field field = Field::QQ);

// When enabled, every homology computation is carried out over both fields
// and disagreements are counted.
struct FieldAudit {
  std::uint64_t complexes = 0;
  std::uint64_t mismatches = 0;
};
void set_field_audit(bool enabled);
bool field_audit_enabled();
FieldAudit field_audit();
void reset_field_audit();

struct RegularityReport {
  int reg = 0;
  int reg_mod = 0;                     // reg(R/I)
  std::vector<std::string> witness;    // variables of W
  int witness_dim = -1;                // d with reduced H_d of the restriction nonzero
  Field field = Field::QQ;
  bool degenerate = false;             // zero or unit ideal, value fixed at 0
  int variables = 0;                   // squarefree variables actually examined

  std::string to_json() const;
};

// Hochster's formula over the lcm lattice of the generators. DomainError on
// non-squarefree input; ResourceError above kRegularityGuard support
// variables unless overridden.
RegularityReport regularity_squarefree(const MonomialIdeal& ideal, Field field = Field::QQ,
                                       bool guard_override = false);
// Any monomial ideal, through its polarization.
RegularityReport regularity(const MonomialIdeal& ideal, Field field = Field::QQ, bool guard_override = false);

RegularityReport edge_regularity(const Graph& g, Field field = Field::QQ);
RegularityReport power_regularity(const Graph& g, int q, Field field = Field::QQ, bool guard_override = false);
// Through the colon graph G'.
RegularityReport colon_regularity(const Graph& g, const EdgeMultiset& edges, Field field = Field::QQ,
                                  bool guard_override = false);
// Through the monomial colon (I^{s+1} : e_1 ... e_s) and polarization.
RegularityReport colon_regularity_monomial(const Graph& g, const EdgeMultiset& edges, Field field = Field::QQ,
                                           bool guard_override = false);

// All multisets of `size` edges of g, in lexicographic order of edge indices.
std::vector<EdgeMultiset> edge_multisets(const Graph& g, int size);

// max(reg(I^{q-1}), max_M reg(I^q : M) + 2(q-1)) over (q-1)-multisets M of
// edges; an upper bound for reg(I^q). DomainError for q < 2.
int banerjee_bound(const Graph& g, int q, Field field = Field::QQ, bool guard_override = false);

}  // namespace edgereg
