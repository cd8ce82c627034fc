#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "edgereg/error.hpp"
#include "edgereg/invariants.hpp"
#include "edgereg/regularity.hpp"

namespace edgereg {

std::string to_string(Field f) { return f == Field::QQ ? "QQ" : "GFp"; }

Field parse_field(const std::string& text) {
  if (text == "qq" || text == "QQ") return Field::QQ;
  if (text == "gfp" || text == "GFp" || text == "GFP") return Field::GFp;
  throw UsageError("unknown field '" + text + "' (expected qq or gfp)");
}

// --- complexes -----------------------------------------------------------

namespace {

std::vector<Face> maximal_faces(std::vector<Face> fs) {
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  std::vector<Face> out;
  for (Face f : fs) {
    bool covered = false;
    for (Face g : fs)
      if (g != f && (f & ~g) == 0) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(f);
  }
  return out;
}

void check_ground(int ground) {
  if (ground < 0 || ground > 32) throw DomainError("ground set must have at most 32 elements");
}

}  // namespace

SimplicialComplex::SimplicialComplex(int ground, std::vector<Face> facets) : ground_(ground) {
  check_ground(ground);
  const Face all = ground == 32 ? ~Face{0} : (Face{1} << ground) - 1;
  for (Face f : facets)
    if (f & ~all) throw DomainError("facet uses a vertex outside the ground set");
  facets_ = maximal_faces(std::move(facets));
}

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return (f & ~g) == 0; });
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int best = 0;
  for (Face f : facets_) best = std::max(best, std::popcount(f));
  return best - 1;
}

std::vector<Face> SimplicialComplex::faces() const {
  std::vector<Face> out;
  if (facets_.empty()) return out;
  std::vector<Face> stack{0};
  while (!stack.empty()) {
    const Face f = stack.back();
    stack.pop_back();
    out.push_back(f);
    const int start = f == 0 ? 0 : 32 - std::countl_zero(f);
    for (int v = start; v < ground_; ++v)
      if (contains(f | (Face{1} << v))) stack.push_back(f | (Face{1} << v));
  }
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

SimplicialComplex independence_complex(const Graph& g) {
  check_ground(g.order());
  std::vector<Face> facets;
  for_each_maximal_independent_set(g, g.vertices(), [&](VertexSet s) { facets.push_back(static_cast<Face>(s.bits())); });
  return SimplicialComplex(g.order(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& d, Face f) {
  if (!d.contains(f)) throw DomainError("link of a set that is not a face");
  std::vector<Face> facets;
  for (Face g : d.facets())
    if ((f & ~g) == 0) facets.push_back(g & ~f);
  return SimplicialComplex(d.ground(), std::move(facets));
}

SimplicialComplex restrict(const SimplicialComplex& d, Face w) {
  std::vector<Face> facets;
  for (Face g : d.facets()) facets.push_back(g & w);
  if (d.is_void()) return d;
  return SimplicialComplex(d.ground(), std::move(facets));
}

// --- field audit ----------------------------------------------------------

namespace {

std::atomic<bool> g_audit{false};
std::atomic<std::uint64_t> g_audit_complexes{0};
std::atomic<std::uint64_t> g_audit_mismatches{0};

}  // namespace

void set_field_audit(bool enabled) { g_audit = enabled; }
bool field_audit_enabled() { return g_audit; }
FieldAudit field_audit() { return {g_audit_complexes.load(), g_audit_mismatches.load()}; }
void reset_field_audit() {
  g_audit_complexes = 0;
  g_audit_mismatches = 0;
}

// --- boundary ranks --------------------------------------------------------

namespace {

template <class T>
using Column = std::vector<std::pair<int, T>>;

struct Overflow {};

struct ModP {
  using T = std::uint32_t;
  static T from_sign(int s) { return s > 0 ? 1 : kPrime - 1; }
  static T inverse(T a) {
    std::int64_t t = 0, nt = 1, r = kPrime, nr = a;
    while (nr != 0) {
      const std::int64_t q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    return static_cast<T>(t < 0 ? t + kPrime : t);
  }
  // target -= (target.low / source.low) * source
  static void eliminate(Column<T>& target, const Column<T>& source) {
    const std::uint64_t factor =
        static_cast<std::uint64_t>(target.back().second) * inverse(source.back().second) % kPrime;
    Column<T> out;
    out.reserve(target.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < source.size()) {
      if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
        out.push_back(target[i++]);
      } else {
        const T sub = static_cast<T>(factor * source[j].second % kPrime);
        if (i < target.size() && target[i].first == source[j].first) {
          const T v = static_cast<T>((target[i].second + kPrime - sub) % kPrime);
          if (v) out.emplace_back(target[i].first, v);
          ++i;
        } else {
          out.emplace_back(source[j].first, static_cast<T>((kPrime - sub) % kPrime));
        }
        ++j;
      }
    }
    target = std::move(out);
  }
};

// Fraction-free elimination: target = b * target - a * source, where a and b
// are the low entries, then the column is divided by its content.
template <class Int>
struct Integers {
  using T = Int;
  static T from_sign(int s) { return T(s); }

  static T mul(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
      T r;
      if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
      return r;
    } else {
      return a * b;
    }
  }
  static T sub(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
      T r;
      if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
      return r;
    } else {
      return a - b;
    }
  }
  static T abs(const T& a) { return a < 0 ? T(-a) : a; }
  static T gcd(T a, T b) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
      return std::gcd(a, b);
    } else {
      return boost::multiprecision::gcd(a, b);
    }
  }

  static void eliminate(Column<T>& target, const Column<T>& source) {
    T a = target.back().second, b = source.back().second;
    const T g = gcd(abs(a), abs(b));
    a /= g;
    b /= g;
    Column<T> out;
    out.reserve(target.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < source.size()) {
      if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
        out.emplace_back(target[i].first, mul(b, target[i].second));
        ++i;
      } else if (i < target.size() && target[i].first == source[j].first) {
        T v = sub(mul(b, target[i].second), mul(a, source[j].second));
        if (v != 0) out.emplace_back(target[i].first, std::move(v));
        ++i;
        ++j;
      } else {
        out.emplace_back(source[j].first, sub(T(0), mul(a, source[j].second)));
        ++j;
      }
    }
    T content = 0;
    for (const auto& e : out) {
      content = gcd(content, abs(e.second));
      if (content == 1) break;
    }
    if (content > 1)
      for (auto& e : out) e.second /= content;
    target = std::move(out);
  }
};

// Rank of a boundary matrix with columns `faces` of one size. Columns whose
// face is flagged in `skip` are known to reduce to zero. On return
// `pivot_faces` flags the row faces used as pivots.
template <class Ops>
std::int64_t reduce_rank(const std::vector<Face>& faces, const std::vector<Face>& rows, const std::vector<char>& skip,
                         std::vector<char>& pivot_faces) {
  using T = typename Ops::T;
  std::vector<int> pivot_of(rows.size(), -1);
  std::vector<Column<T>> reduced(faces.size());
  pivot_faces.assign(rows.size(), 0);
  std::int64_t rank = 0;
  for (std::size_t c = 0; c < faces.size(); ++c) {
    if (!skip.empty() && skip[c]) continue;
    Column<T> col;
    int pos = 0;
    for (Face rest = faces[c]; rest; rest &= rest - 1, ++pos) {
      const Face bit = rest & (~rest + 1);
      const Face boundary = faces[c] & ~bit;
      const auto row = std::lower_bound(rows.begin(), rows.end(), boundary) - rows.begin();
      col.emplace_back(static_cast<int>(row), Ops::from_sign(pos % 2 == 0 ? 1 : -1));
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!col.empty()) {
      const int low = col.back().first;
      const int p = pivot_of[static_cast<std::size_t>(low)];
      if (p < 0) break;
      Ops::eliminate(col, reduced[static_cast<std::size_t>(p)]);
    }
    if (!col.empty()) {
      pivot_of[static_cast<std::size_t>(col.back().first)] = static_cast<int>(c);
      pivot_faces[static_cast<std::size_t>(col.back().first)] = 1;
      reduced[c] = std::move(col);
      ++rank;
    }
  }
  return rank;
}

std::int64_t boundary_rank(const std::vector<Face>& faces, const std::vector<Face>& rows, const std::vector<char>& skip,
                           std::vector<char>& pivots, Field field) {
  if (field == Field::GFp) return reduce_rank<ModP>(faces, rows, skip, pivots);
  try {
    return reduce_rank<Integers<std::int64_t>>(faces, rows, skip, pivots);
  } catch (const Overflow&) {
    return reduce_rank<Integers<boost::multiprecision::cpp_int>>(faces, rows, skip, pivots);
  }
}

// by_size[k] holds the faces with k vertices, sorted.
std::vector<std::int64_t> ranks_from_faces(const std::vector<std::vector<Face>>& by_size, Field field) {
  const int top = static_cast<int>(by_size.size()) - 1;  // largest face size
  std::vector<std::int64_t> rank(static_cast<std::size_t>(top) + 2, 0);  // rank[k]: boundary from size k
  std::vector<char> skip, pivots;
  for (int k = top; k >= 1; --k) {
    const auto& cols = by_size[static_cast<std::size_t>(k)];
    const auto& rows = by_size[static_cast<std::size_t>(k - 1)];
    rank[static_cast<std::size_t>(k)] = boundary_rank(cols, rows, skip, pivots, field);
    skip = pivots;
  }
  std::vector<std::int64_t> out;
  for (int k = 0; k <= top; ++k) {
    const auto f = static_cast<std::int64_t>(by_size[static_cast<std::size_t>(k)].size());
    out.push_back(f - rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k) + 1]);
  }
  return out;
}

std::vector<std::int64_t> audited_ranks(const std::vector<std::vector<Face>>& by_size, Field field) {
  auto ranks = ranks_from_faces(by_size, field);
  if (g_audit) {
    const Field other = field == Field::QQ ? Field::GFp : Field::QQ;
    ++g_audit_complexes;
    if (ranks_from_faces(by_size, other) != ranks) ++g_audit_mismatches;
  }
  return ranks;
}

std::vector<std::vector<Face>> group_by_size(std::vector<Face> faces) {
  std::vector<std::vector<Face>> by_size;
  for (Face f : faces) {
    const auto k = static_cast<std::size_t>(std::popcount(f));
    if (by_size.size() <= k) by_size.resize(k + 1);
    by_size[k].push_back(f);
  }
  for (auto& level : by_size) std::sort(level.begin(), level.end());
  return by_size;
}

}  // namespace

std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& d, Field field) {
  if (d.ground() > kHomologyGuard)
    throw ResourceError("homology is guarded at " + std::to_string(kHomologyGuard) + " vertices, complex has " +
                        std::to_string(d.ground()));
  if (d.is_void()) return {};
  return audited_ranks(group_by_size(d.faces()), field);
}

std::vector<std::int64_t> reduced_homology_ranks_of_nonfaces(Face ground, const std::vector<Face>& nonfaces,
                                                             Field field) {
  if (std::popcount(ground) > kHomologyGuard)
    throw ResourceError("homology is guarded at " + std::to_string(kHomologyGuard) + " vertices");
  std::vector<std::vector<Face>> by_top(32);
  for (Face n : nonfaces) {
    if (n == 0) return {};  // the unit ideal: void complex
    if ((n & ~ground) == 0) by_top[static_cast<std::size_t>(31 - std::countl_zero(n))].push_back(n);
  }
  std::vector<Face> faces;
  std::vector<Face> stack{0};
  while (!stack.empty()) {
    const Face f = stack.back();
    stack.pop_back();
    faces.push_back(f);
    const int start = f == 0 ? 0 : 32 - std::countl_zero(f);
    for (int v = start; v < 32; ++v) {
      const Face bit = Face{1} << v;
      if (!(ground & bit)) continue;
      const Face g = f | bit;
      bool ok = true;
      for (Face n : by_top[static_cast<std::size_t>(v)])
        if ((n & ~g) == 0) {
          ok = false;
          break;
        }
      if (ok) stack.push_back(g);
    }
  }
  return audited_ranks(group_by_size(std::move(faces)), field);
}

}  // namespace edgereg
