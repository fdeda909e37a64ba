#include "clutterlab/simplicial.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "clutterlab/error.hpp"

namespace clutterlab {

std::string to_string(Field f) { return f.is_rationals() ? "q" : "f" + std::to_string(f.prime); }

Field parse_field(const std::string& name) {
  if (name == "q" || name == "Q") return Field::rationals();
  if (name.size() > 1 && (name[0] == 'f' || name[0] == 'F')) {
    unsigned long p = 0;
    try {
      p = std::stoul(name.substr(1));
    } catch (const std::exception&) {
      throw Error("unknown field '" + name + "'");
    }
    if (p < 2) throw Error("unknown field '" + name + "'");
    for (unsigned long d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw Error("field characteristic " + std::to_string(p) + " is not prime");
    }
    return Field::gf(static_cast<std::uint32_t>(p));
  }
  throw Error("unknown field '" + name + "' (expected q or f<prime>)");
}

SimplicialComplex::SimplicialComplex(std::size_t num_vertices, std::vector<Edge> facets)
    : num_vertices_(num_vertices) {
  if (num_vertices > kMaxMaskVertices) throw InstanceTooLarge("simplicial complex limited to 64 vertices");
  for (const auto& f : facets) {
    for (Vertex v : f) {
      if (v >= num_vertices) throw Error("facet vertex out of range");
    }
  }
  canonicalize_edges(facets);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (const auto& f : facets) {
    bool dominated = std::any_of(facets.begin(), facets.end(), [&](const Edge& g) {
      return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (!dominated) facets_.push_back(f);
  }
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::contains(const Edge& face) const {
  Edge sorted = face;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(), [&](const Edge& f) {
    return std::includes(f.begin(), f.end(), sorted.begin(), sorted.end());
  });
}

std::vector<std::vector<VertexMask>> SimplicialComplex::faces_by_size() const {
  std::unordered_set<VertexMask> all{0};
  for (const auto& f : facets_) {
    const VertexMask full = edge_to_mask(f);
    // all submasks of the facet
    for (VertexMask s = full;; s = (s - 1) & full) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<std::vector<VertexMask>> out(static_cast<std::size_t>(dimension() + 2));
  for (VertexMask s : all) out[std::popcount(s)].push_back(s);
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

namespace {

struct ModP {
  using value_type = std::uint32_t;
  std::uint32_t p;

  value_type from_int(int x) const { return x >= 0 ? x % p : (p - static_cast<std::uint32_t>(-x) % p) % p; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type mul(value_type a, value_type b) const { return static_cast<value_type>(std::uint64_t{a} * b % p); }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
  value_type inv(value_type a) const {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
};

struct Rationals {
  using value_type = mpq_class;
  value_type from_int(int x) const { return x; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type inv(const value_type& a) const { return 1 / a; }
};

template <class F>
using SparseColumn = std::vector<std::pair<std::uint32_t, typename F::value_type>>;

// out = col - factor * other, both sorted by row.
template <class F>
void axpy(const F& field, const SparseColumn<F>& col, const typename F::value_type& factor,
          const SparseColumn<F>& other, SparseColumn<F>& out) {
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < other.size()) {
    if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
      out.push_back(col[i++]);
    } else if (i == col.size() || other[j].first < col[i].first) {
      out.emplace_back(other[j].first, field.sub(field.from_int(0), field.mul(factor, other[j].second)));
      ++j;
    } else {
      auto v = field.sub(col[i].second, field.mul(factor, other[j].second));
      if (!field.is_zero(v)) out.emplace_back(col[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
}

template <class F>
std::size_t rank_by_reduction(const F& field, const std::vector<VertexMask>& faces, const std::vector<VertexMask>& lower,
                              const std::vector<bool>* cleared = nullptr, std::vector<std::uint32_t>* pivots = nullptr) {
  if (faces.empty() || lower.empty()) return 0;
  std::unordered_map<VertexMask, std::uint32_t> row_of;
  row_of.reserve(lower.size() * 2);
  for (std::uint32_t r = 0; r < lower.size(); ++r) row_of.emplace(lower[r], r);

  std::vector<SparseColumn<F>> reduced;
  std::vector<std::int64_t> pivot_owner(lower.size(), -1);
  std::size_t rank = 0;
  SparseColumn<F> col, scratch;
  for (std::size_t j = 0; j < faces.size(); ++j) {
    if (cleared && (*cleared)[j]) continue;
    const VertexMask f = faces[j];
    col.clear();
    int sign = 1;
    for (VertexMask m = f; m; m &= m - 1) {
      VertexMask bit = m & -m;
      col.emplace_back(row_of.at(f & ~bit), field.from_int(sign));
      sign = -sign;
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!col.empty()) {
      const std::int64_t owner = pivot_owner[col.back().first];
      if (owner < 0) break;
      const auto& other = reduced[static_cast<std::size_t>(owner)];
      auto factor = field.mul(col.back().second, field.inv(other.back().second));
      axpy(field, col, factor, other, scratch);
      std::swap(col, scratch);
    }
    if (!col.empty()) {
      pivot_owner[col.back().first] = static_cast<std::int64_t>(reduced.size());
      if (pivots) pivots->push_back(col.back().first);
      reduced.push_back(col);
      ++rank;
    }
  }
  return rank;
}

template <class F>
std::vector<std::size_t> boundary_ranks(const F& field, const std::vector<std::vector<VertexMask>>& faces) {
  const std::size_t levels = faces.size();
  std::vector<std::size_t> rank(levels + 1, 0);
  std::vector<std::uint32_t> pivots;
  for (std::size_t k = levels; k-- > 1;) {
    std::vector<bool> skip(faces[k].size(), false);
    for (std::uint32_t p : pivots) skip[p] = true;
    pivots.clear();
    rank[k] = rank_by_reduction(field, faces[k], faces[k - 1], &skip, &pivots);
  }
  return rank;
}

}  // namespace

std::size_t boundary_rank(const std::vector<VertexMask>& faces, const std::vector<VertexMask>& lower, Field field) {
  if (field.is_rationals()) return rank_by_reduction(Rationals{}, faces, lower);
  return rank_by_reduction(ModP{field.prime}, faces, lower);
}

HomologyProfile reduced_homology_of_faces(const std::vector<std::vector<VertexMask>>& faces, Field field) {
  HomologyProfile profile;
  profile.field = field;
  const std::size_t levels = faces.size();
  // rank[k] = rank of the boundary from size-k faces to size-(k-1) faces.
  const auto rank = field.is_rationals() ? boundary_ranks(Rationals{}, faces) : boundary_ranks(ModP{field.prime}, faces);
  profile.betti.resize(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    profile.betti[k] = faces[k].size() - rank[k] - rank[k + 1];
  }
  return profile;
}

HomologyProfile reduced_homology(const SimplicialComplex& complex, Field field) {
  return reduced_homology_of_faces(complex.faces_by_size(), field);
}

}  // namespace clutterlab
