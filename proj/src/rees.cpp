#include "clutterlab/rees.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "clutterlab/covering.hpp"
#include "clutterlab/error.hpp"
#include "clutterlab/lp.hpp"

namespace clutterlab {

ReesCone rees_cone(const Clutter& c) {
  ReesCone cone;
  cone.n = c.num_vertices();
  const std::size_t dim = cone.n + 1;
  for (const auto& e : c.edges()) {
    LatticePoint g(dim, 0);
    for (Vertex v : e) g[v] = 1;
    g[cone.n] = 1;
    cone.generators.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < cone.n; ++i) {
    LatticePoint g(dim, 0);
    g[i] = 1;
    cone.generators.push_back(std::move(g));
  }
  return cone;
}

bool in_cone(std::span<const LatticePoint> facets, std::span<const long long> x) {
  for (const auto& f : facets) {
    __int128 s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) s += static_cast<__int128>(f[k]) * x[k];
    if (s < 0) return false;
  }
  return true;
}

namespace {

Rational as_rational(long long v) { return Rational(static_cast<long>(v)); }

using Matrix = std::vector<std::vector<long long>>;

long long checked(__int128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw InstanceTooLarge("integer overflow in cone computation");
  }
  return static_cast<long long>(v);
}

// Fraction-free (Bareiss) determinant.
long long determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(m[i][j]) * m[k][k] - static_cast<__int128>(m[i][k]) * m[k][j];
        m[i][j] = checked(v / prev);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

long long dot(const LatticePoint& a, const LatticePoint& b) {
  __int128 s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += static_cast<__int128>(a[k]) * b[k];
  return checked(s);
}

// Primitive normal of the hyperplane spanned by dim-1 vectors, oriented so
// that `inside` has positive product.
LatticePoint hyperplane_normal(const std::vector<const LatticePoint*>& spanning, const LatticePoint& inside) {
  const std::size_t dim = inside.size();
  LatticePoint normal(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    Matrix m;
    for (const auto* v : spanning) {
      std::vector<long long> row;
      for (std::size_t c = 0; c < dim; ++c) {
        if (c != k) row.push_back((*v)[c]);
      }
      m.push_back(std::move(row));
    }
    long long d = determinant(std::move(m));
    normal[k] = (k % 2 == 0) ? d : -d;
  }
  long long g = 0;
  for (long long x : normal) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1) {
    for (auto& x : normal) x /= g;
  }
  if (dot(normal, inside) < 0) {
    for (auto& x : normal) x = -x;
  }
  return normal;
}

std::size_t rank_of(const std::vector<LatticePoint>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    auto& row = m.emplace_back();
    for (long long x : r) row.push_back(as_rational(x));
  }
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

struct BoundaryFace {
  std::vector<int> gens;  // sorted, dim-1 generator indices
  LatticePoint normal;
};

struct Triangulation {
  std::vector<std::vector<int>> simplices;
  std::vector<BoundaryFace> boundary;
};

// Placing triangulation of a full-dimensional pointed cone: start from a
// simplex of linearly independent generators and add the others one at a time,
// coning each new generator over the boundary faces it strictly sees.
Triangulation place(const std::vector<LatticePoint>& gens) {
  const std::size_t dim = gens.front().size();
  Triangulation tri;

  std::vector<int> initial;
  std::vector<LatticePoint> chosen;
  for (std::size_t g = 0; g < gens.size() && initial.size() < dim; ++g) {
    chosen.push_back(gens[g]);
    if (rank_of(chosen) == chosen.size()) {
      initial.push_back(static_cast<int>(g));
    } else {
      chosen.pop_back();
    }
  }
  if (initial.size() != dim) throw Error("Rees cone is not full-dimensional");
  tri.simplices.push_back(initial);

  auto make_face = [&](std::vector<int> face, int opposite) {
    std::sort(face.begin(), face.end());
    std::vector<const LatticePoint*> span;
    for (int g : face) span.push_back(&gens[g]);
    BoundaryFace f{std::move(face), hyperplane_normal(span, gens[opposite])};
    return f;
  };

  for (std::size_t drop = 0; drop < dim; ++drop) {
    std::vector<int> face;
    for (std::size_t k = 0; k < dim; ++k) {
      if (k != drop) face.push_back(initial[k]);
    }
    tri.boundary.push_back(make_face(std::move(face), initial[drop]));
  }

  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (std::find(initial.begin(), initial.end(), static_cast<int>(g)) != initial.end()) continue;
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < tri.boundary.size(); ++f) {
      if (dot(tri.boundary[f].normal, gens[g]) < 0) visible.push_back(f);
    }
    if (visible.empty()) continue;

    // ridge -> (number of visible faces containing it, vertex opposite in the last one)
    std::map<std::vector<int>, std::pair<int, int>> ridges;
    for (std::size_t f : visible) {
      const auto& face = tri.boundary[f].gens;
      std::vector<int> simplex = face;
      simplex.push_back(static_cast<int>(g));
      std::sort(simplex.begin(), simplex.end());
      tri.simplices.push_back(std::move(simplex));
      for (std::size_t drop = 0; drop < face.size(); ++drop) {
        std::vector<int> ridge;
        for (std::size_t k = 0; k < face.size(); ++k) {
          if (k != drop) ridge.push_back(face[k]);
        }
        auto& slot = ridges[ridge];
        slot.first += 1;
        slot.second = face[drop];
      }
    }
    std::vector<BoundaryFace> next;
    std::size_t vi = 0;
    for (std::size_t f = 0; f < tri.boundary.size(); ++f) {
      if (vi < visible.size() && visible[vi] == f) {
        ++vi;
        continue;
      }
      next.push_back(std::move(tri.boundary[f]));
    }
    for (auto& [ridge, info] : ridges) {
      if (info.first != 1) continue;  // interior to the visible region
      std::vector<int> face = ridge;
      face.push_back(static_cast<int>(g));
      next.push_back(make_face(std::move(face), info.second));
    }
    tri.boundary = std::move(next);
  }
  return tri;
}

long long floor_div(__int128 a, long long b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return checked(q);
}

// Nonzero lattice points of the half-open parallelepiped {sum l_k g_k : 0 <= l_k < 1}.
void parallelepiped_points(const std::vector<LatticePoint>& gens, const std::vector<int>& simplex,
                           std::set<LatticePoint>& out) {
  const std::size_t dim = simplex.size();
  Matrix m(dim, std::vector<long long>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) m[r][c] = gens[simplex[c]][r];
  }
  const long long det = determinant(m);
  if (det == 0) throw Error("degenerate simplex in triangulation");
  if (det == 1 || det == -1) return;

  // adj = det * M^{-1}, computed exactly.
  std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(2 * dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) aug[r][c] = as_rational(m[r][c]);
    aug[r][dim + r] = 1;
  }
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t piv = c;
    while (aug[piv][c] == 0) ++piv;
    std::swap(aug[piv], aug[c]);
    Rational p = aug[c][c];
    for (auto& x : aug[c]) x /= p;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      Rational f = aug[r][c];
      for (std::size_t k = 0; k < 2 * dim; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  Matrix adj(dim, std::vector<long long>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Rational v = aug[r][dim + c] * as_rational(det);
      adj[r][c] = v.get_num().get_si();
    }
  }

  auto reduce = [&](const LatticePoint& x) {
    LatticePoint y = x;
    for (std::size_t k = 0; k < dim; ++k) {
      __int128 num = 0;
      for (std::size_t c = 0; c < dim; ++c) num += static_cast<__int128>(adj[k][c]) * x[c];
      long long fl = floor_div(num, det);
      if (fl == 0) continue;
      for (std::size_t r = 0; r < dim; ++r) y[r] = checked(static_cast<__int128>(y[r]) - static_cast<__int128>(fl) * m[r][k]);
    }
    return y;
  };

  std::vector<LatticePoint> steps;
  for (std::size_t k = 0; k < dim; ++k) {
    LatticePoint e(dim, 0);
    e[k] = 1;
    LatticePoint s = reduce(e);
    if (std::any_of(s.begin(), s.end(), [](long long v) { return v != 0; })) steps.push_back(std::move(s));
  }
  // The points form the group Z^dim / M Z^dim; close {0} under the unit steps.
  std::set<LatticePoint> group{LatticePoint(dim, 0)};
  std::vector<LatticePoint> frontier{LatticePoint(dim, 0)};
  while (!frontier.empty()) {
    LatticePoint p = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& s : steps) {
      LatticePoint sum(dim);
      for (std::size_t r = 0; r < dim; ++r) sum[r] = p[r] + s[r];
      LatticePoint red = reduce(sum);
      if (group.insert(red).second) frontier.push_back(std::move(red));
    }
  }
  const long long order = det < 0 ? -det : det;
  if (static_cast<long long>(group.size()) != order) throw Error("parallelepiped enumeration is inconsistent");
  for (const auto& p : group) {
    if (std::any_of(p.begin(), p.end(), [](long long v) { return v != 0; })) out.insert(p);
  }
}

bool degree_then_lex(const LatticePoint& a, const LatticePoint& b) {
  if (a.back() != b.back()) return a.back() < b.back();
  return a < b;
}

}  // namespace

HilbertBasis hilbert_basis(const ReesCone& cone, const HilbertBasisLimits& limits) {
  const std::size_t n = cone.n;
  const std::size_t q = cone.generators.size() - n;
  if (n > limits.max_vertices || q > limits.max_edges) {
    throw InstanceTooLarge("Hilbert basis limited to n <= " + std::to_string(limits.max_vertices) +
                           ", q <= " + std::to_string(limits.max_edges) + " (got n = " + std::to_string(n) +
                           ", q = " + std::to_string(q) + ")");
  }
  HilbertBasis hb;
  if (q == 0) {
    // Cone is the orthant of the first n coordinates.
    for (std::size_t i = 0; i < n; ++i) {
      LatticePoint e(n + 1, 0);
      e[i] = 1;
      hb.elements.push_back(std::move(e));
      LatticePoint f(n + 1, 0);
      f[i] = 1;
      hb.facets.push_back(std::move(f));
    }
    std::sort(hb.elements.begin(), hb.elements.end(), degree_then_lex);
    std::sort(hb.facets.begin(), hb.facets.end());
    return hb;
  }

  Triangulation tri = place(cone.generators);
  std::set<LatticePoint> facets;
  for (const auto& f : tri.boundary) facets.insert(f.normal);
  hb.facets.assign(facets.begin(), facets.end());

  std::set<LatticePoint> candidates(cone.generators.begin(), cone.generators.end());
  for (const auto& s : tri.simplices) parallelepiped_points(cone.generators, s, candidates);

  std::vector<LatticePoint> sorted(candidates.begin(), candidates.end());
  auto total = [](const LatticePoint& p) { return std::accumulate(p.begin(), p.end(), 0LL); };
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const LatticePoint& a, const LatticePoint& b) { return total(a) < total(b); });

  // h is reducible iff h - s lies in the cone for an irreducible s of smaller total.
  std::vector<LatticePoint> irreducible;
  LatticePoint diff(n + 1);
  for (const auto& h : sorted) {
    const long long th = total(h);
    bool reducible = false;
    for (const auto& s : irreducible) {
      if (total(s) >= th) continue;
      bool dominated = true;
      for (std::size_t k = 0; k <= n; ++k) {
        diff[k] = h[k] - s[k];
        if (diff[k] < 0) {
          dominated = false;
          break;
        }
      }
      if (dominated && in_cone(hb.facets, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irreducible.push_back(h);
  }
  std::sort(irreducible.begin(), irreducible.end(), degree_then_lex);
  hb.elements = std::move(irreducible);
  return hb;
}

// ---------------------------------------------------------------- memberships

namespace {

class PowerSearch {
 public:
  PowerSearch(const std::vector<VertexMask>& edges) : edges_(edges) {
    min_size_ = 64;
    for (VertexMask e : edges_) min_size_ = std::min(min_size_, std::popcount(e));
  }

  bool contains(std::vector<int> a, int i) { return search(0, a, i); }

 private:
  bool search(std::size_t start, std::vector<int>& a, int i) {
    if (i == 0) return true;
    if (edges_.empty()) return false;
    const long long total = std::accumulate(a.begin(), a.end(), 0LL);
    if (total < static_cast<long long>(i) * min_size_) return false;
    std::vector<int> key(a);
    key.push_back(static_cast<int>(start));
    key.push_back(i);
    if (failed_.count(key)) return false;
    for (std::size_t j = start; j < edges_.size(); ++j) {
      VertexMask e = edges_[j];
      bool fits = true;
      for (VertexMask m = e; m; m &= m - 1) {
        if (a[std::countr_zero(m)] == 0) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (VertexMask m = e; m; m &= m - 1) --a[std::countr_zero(m)];
      bool ok = search(j, a, i - 1);
      for (VertexMask m = e; m; m &= m - 1) ++a[std::countr_zero(m)];
      if (ok) return true;
    }
    failed_.insert(std::move(key));
    return false;
  }

  const std::vector<VertexMask>& edges_;
  int min_size_;
  std::set<std::vector<int>> failed_;
};

bool closure_lp(const Clutter& c, const ExponentVector& a, int i) {
  const std::size_t q = c.num_edges();
  LinearProgram lp(Direction::minimize, std::vector<Rational>(q, 0));
  lp.add_constraint(std::vector<Rational>(q, 1), Sense::equal, i);
  for (Vertex v = 0; v < c.num_vertices(); ++v) {
    std::vector<Rational> row(q);
    for (std::size_t j = 0; j < q; ++j) {
      if (std::binary_search(c.edge(j).begin(), c.edge(j).end(), v)) row[j] = 1;
    }
    lp.add_constraint(std::move(row), Sense::less_equal, a[v]);
  }
  return !std::holds_alternative<LpInfeasible>(solve_lp_exact(lp));
}

void check_length(const Clutter& c, const ExponentVector& a) {
  if (a.size() != c.num_vertices()) throw Error("exponent vector length does not match vertex count");
}

std::size_t min_edge_size(const Clutter& c) {
  std::size_t m = c.num_vertices() + 1;
  for (const auto& e : c.edges()) m = std::min(m, e.size());
  return m;
}

}  // namespace

bool power_membership(const Clutter& c, const ExponentVector& a, int i) {
  check_length(c, a);
  if (i < 0) throw Error("power must be non-negative");
  auto edges = c.edge_masks();
  return PowerSearch(edges).contains(a.entries(), i);
}

bool integral_closure_membership(const Clutter& c, const ExponentVector& a, int i) {
  check_length(c, a);
  if (i < 0) throw Error("power must be non-negative");
  if (i == 0) return true;
  if (c.empty()) return false;
  if (a.sum() < static_cast<long long>(i) * static_cast<long long>(min_edge_size(c))) return false;
  return closure_lp(c, a, i);
}

namespace {

bool symbolic_with_covers(std::span<const VertexMask> covers, const ExponentVector& a, int i) {
  for (VertexMask cover : covers) {
    long long s = 0;
    for (VertexMask m = cover; m; m &= m - 1) s += a[std::countr_zero(m)];
    if (s < i) return false;
  }
  return true;
}

}  // namespace

bool symbolic_power_membership(const Clutter& c, const ExponentVector& a, int i) {
  check_length(c, a);
  auto edges = c.edge_masks();
  return symbolic_with_covers(masks::minimal_covers(edges), a, i);
}

NormalityVerdict is_normal(const Clutter& c, const HilbertBasisLimits& limits) {
  NormalityVerdict verdict;
  verdict.basis = hilbert_basis(rees_cone(c), limits);
  auto edges = c.edge_masks();
  PowerSearch search(edges);
  const std::size_t n = c.num_vertices();
  for (const auto& h : verdict.basis.elements) {
    const long long b = h[n];
    if (b == 0) continue;
    std::vector<int> a(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(n));
    if (!search.contains(a, static_cast<int>(b))) {
      verdict.normal = false;
      verdict.witness = h;
      break;
    }
  }
  return verdict;
}

namespace {

template <class Failure>
PowerCheck first_power_failure(const Clutter& c, int k, Failure&& is_failure) {
  if (k < 1) throw Error("power bound must be >= 1");
  PowerCheck check;
  check.bound = k;
  const std::size_t n = c.num_vertices();
  for (int i = 1; i <= k && !check.counterexample; ++i) {
    std::vector<int> a(n, 0);
    while (true) {
      ExponentVector av(a);
      if (is_failure(av, i)) {
        check.counterexample = PowerCounterexample{std::move(av), i};
        break;
      }
      std::size_t pos = n;
      while (pos > 0 && a[pos - 1] == i) a[--pos] = 0;
      if (pos == 0) break;
      ++a[pos - 1];
    }
  }
  return check;
}

}  // namespace

// The first failure in lexicographic order is automatically a minimal
// generator: any smaller failure below it would come first.
PowerCheck is_normal_bounded(const Clutter& c, int k) {
  auto edges = c.edge_masks();
  PowerSearch powers(edges);
  const long long min_size = static_cast<long long>(min_edge_size(c));
  return first_power_failure(c, k, [&](const ExponentVector& a, int i) {
    if (powers.contains(a.entries(), i)) return false;
    if (c.empty() || a.sum() < i * min_size) return false;
    return closure_lp(c, a, i);
  });
}

PowerCheck is_ntf_bounded(const Clutter& c, int k) {
  auto edges = c.edge_masks();
  const auto covers = masks::minimal_covers(edges);
  PowerSearch powers(edges);
  return first_power_failure(c, k, [&](const ExponentVector& a, int i) {
    return symbolic_with_covers(covers, a, i) && !powers.contains(a.entries(), i);
  });
}

std::string monomial_string(const Clutter& c, std::span<const long long> a, long long b) {
  std::string out;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += c.label(v) + "^" + std::to_string(a[v]);
  }
  if (out.empty()) out = "1";
  return out + " t^" + std::to_string(b);
}

std::string monomial_string(const Clutter& c, const ExponentVector& a, long long b) {
  std::vector<long long> v(a.begin(), a.end());
  return monomial_string(c, v, b);
}

}  // namespace clutterlab
