#include "clutterlab/polyhedra.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

#include "clutterlab/covering.hpp"
#include "clutterlab/error.hpp"

namespace clutterlab {

LinearProgram covering_lp(const Clutter& c, const ExponentVector& w) {
  if (w.size() != c.num_vertices()) throw Error("weight vector length does not match vertex count");
  std::vector<Rational> obj(w.begin(), w.end());
  LinearProgram lp(Direction::minimize, std::move(obj));
  for (const auto& e : c.edges()) {
    std::vector<Rational> row(c.num_vertices());
    for (Vertex v : e) row[v] = 1;
    lp.add_constraint(std::move(row), Sense::greater_equal, 1);
  }
  return lp;
}

LinearProgram packing_lp(const Clutter& c, const ExponentVector& w) {
  if (w.size() != c.num_vertices()) throw Error("weight vector length does not match vertex count");
  LinearProgram lp(Direction::maximize, std::vector<Rational>(c.num_edges(), 1));
  for (Vertex v = 0; v < c.num_vertices(); ++v) {
    std::vector<Rational> row(c.num_edges());
    for (std::size_t j = 0; j < c.num_edges(); ++j) {
      if (std::binary_search(c.edge(j).begin(), c.edge(j).end(), v)) row[j] = 1;
    }
    lp.add_constraint(std::move(row), Sense::less_equal, w[v]);
  }
  return lp;
}

IntegerSolution solve_covering_ilp(const Clutter& c, const ExponentVector& w) {
  auto result = solve_ilp_exact(covering_lp(c, w));
  const auto& opt = std::get<LpOptimal>(result);  // always feasible and bounded
  IntegerSolution out;
  out.value = opt.value.get_num().get_si();
  for (const auto& x : opt.x) out.point.push_back(x.get_num().get_si());
  return out;
}

// ---------------------------------------------------------------- packing

namespace masks {

namespace {

class PackingSearch {
 public:
  PackingSearch(std::span<const VertexMask> edges, const ExponentVector& w, long long upper)
      : edges_(edges.begin(), edges.end()), caps_(w.begin(), w.end()), upper_(upper), y_(edges.size(), 0) {
    // Suffix data for the capacity bound.
    suffix_support_.assign(edges_.size() + 1, 0);
    suffix_min_size_.assign(edges_.size() + 1, std::numeric_limits<int>::max());
    for (std::size_t j = edges_.size(); j-- > 0;) {
      suffix_support_[j] = suffix_support_[j + 1] | edges_[j];
      suffix_min_size_[j] = std::min(suffix_min_size_[j + 1], std::popcount(edges_[j]));
    }
  }

  long long run() {
    search(0, 0);
    return best_;
  }

  const std::vector<long long>& best_point() const { return best_y_; }

 private:
  long long bound(std::size_t j) const {
    if (j == edges_.size()) return 0;
    long long total = 0;
    long long by_edge = 0;
    for (VertexMask m = suffix_support_[j]; m; m &= m - 1) total += caps_[std::countr_zero(m)];
    for (std::size_t k = j; k < edges_.size(); ++k) by_edge += max_multiplicity(k);
    return std::min(total / suffix_min_size_[j], by_edge);
  }

  long long max_multiplicity(std::size_t j) const {
    long long m = std::numeric_limits<long long>::max();
    for (VertexMask e = edges_[j]; e; e &= e - 1) m = std::min(m, caps_[std::countr_zero(e)]);
    return m;
  }

  void search(std::size_t j, long long value) {
    if (best_ >= upper_) return;
    if (value + bound(j) <= best_ && !best_y_.empty()) return;
    if (j == edges_.size()) {
      if (value > best_ || best_y_.empty()) {
        best_ = value;
        best_y_ = y_;
      }
      return;
    }
    const long long top = max_multiplicity(j);
    for (long long t = top; t >= 0; --t) {
      apply(j, t);
      y_[j] = t;
      search(j + 1, value + t);
      apply(j, -t);
      y_[j] = 0;
      if (best_ >= upper_) return;
    }
  }

  void apply(std::size_t j, long long t) {
    for (VertexMask e = edges_[j]; e; e &= e - 1) caps_[std::countr_zero(e)] -= t;
  }

  std::vector<VertexMask> edges_;
  std::vector<long long> caps_;
  long long upper_;
  std::vector<long long> y_;
  std::vector<VertexMask> suffix_support_;
  std::vector<int> suffix_min_size_;
  long long best_ = 0;
  std::vector<long long> best_y_;
};

}  // namespace

long long packing_value(std::span<const VertexMask> edges, const ExponentVector& w, long long upper,
                        std::vector<long long>* point) {
  if (edges.empty()) {
    if (point) point->clear();
    return 0;
  }
  PackingSearch s(edges, w, upper);
  long long v = s.run();
  if (point) *point = s.best_point();
  return v;
}

}  // namespace masks

IntegerSolution solve_packing_ilp(const Clutter& c, const ExponentVector& w) {
  if (w.size() != c.num_vertices()) throw Error("weight vector length does not match vertex count");
  auto edges = c.edge_masks();
  // Weak duality: the integral cover value bounds the packing from above.
  const long long upper = masks::weighted_cover_number(masks::minimal_covers(edges), w);
  IntegerSolution out;
  out.value = masks::packing_value(edges, w, upper, &out.point);
  out.point.resize(c.num_edges(), 0);
  return out;
}

// ---------------------------------------------------------------- Q(A) vertices

namespace {

// Solves the square system; nullopt if singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::size_t>(r);
}

}  // namespace

std::size_t box_size(std::size_t n, int max, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(max + 1);
    if (total > cap) return cap + 1;
  }
  return total;
}

PolyhedronVertexSet enumerate_Q_vertices(const Clutter& c, std::size_t max_vertices) {
  const std::size_t n = c.num_vertices();
  const std::size_t q = c.num_edges();
  if (n > max_vertices) {
    throw InstanceTooLarge("Q(A) vertex enumeration limited to " + std::to_string(max_vertices) + " vertices");
  }
  constexpr std::size_t kMaxBases = 5'000'000;
  if (binomial_capped(n + q, n, kMaxBases) > kMaxBases) {
    throw InstanceTooLarge("Q(A) vertex enumeration: too many candidate bases");
  }

  // Constraint k < n is x_k >= 0; constraint n + j is the covering row of edge j.
  auto row_of = [&](std::size_t k) {
    std::vector<Rational> row(n);
    if (k < n) {
      row[k] = 1;
    } else {
      for (Vertex v : c.edge(k - n)) row[v] = 1;
    }
    return row;
  };

  std::set<std::vector<Rational>> found;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t k : pick) {
      a.push_back(row_of(k));
      b.emplace_back(k < n ? 0 : 1);
    }
    if (auto x = solve_square(std::move(a), std::move(b))) {
      bool feasible = std::all_of(x->begin(), x->end(), [](const Rational& r) { return r >= 0; });
      for (std::size_t j = 0; feasible && j < q; ++j) {
        Rational s = 0;
        for (Vertex v : c.edge(j)) s += (*x)[v];
        feasible = s >= 1;
      }
      if (feasible) found.insert(std::move(*x));
    }
    // next combination of n out of n+q
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == q + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < n; ++k) pick[k] = pick[k - 1] + 1;
  }

  PolyhedronVertexSet out;
  for (const auto& v : found) {
    out.vertices.push_back(v);
    out.integral.push_back(std::all_of(v.begin(), v.end(), [](const Rational& r) { return is_integer(r); }));
  }
  return out;
}

IdealVerdict is_ideal_clutter(const Clutter& c, std::size_t max_vertices) {
  IdealVerdict verdict;
  verdict.vertices = enumerate_Q_vertices(c, max_vertices);
  for (std::size_t i = 0; i < verdict.vertices.vertices.size(); ++i) {
    if (!verdict.vertices.integral[i]) {
      verdict.ideal = false;
      verdict.fractional_vertex = verdict.vertices.vertices[i];
      return verdict;
    }
  }
  std::set<std::vector<Rational>> cover_vectors;
  for (const auto& cover : minimal_vertex_covers(c).covers) {
    std::vector<Rational> x(c.num_vertices());
    for (Vertex v : cover) x[v] = 1;
    cover_vectors.insert(std::move(x));
  }
  std::set<std::vector<Rational>> vertex_set(verdict.vertices.vertices.begin(), verdict.vertices.vertices.end());
  if (vertex_set != cover_vectors) {
    throw Error("internal inconsistency: integral vertices of Q(A) differ from the minimal cover vectors");
  }
  return verdict;
}

// ---------------------------------------------------------------- MFMC

MfmcResult mfmc_bounded(const Clutter& c, int max_weight, std::size_t max_box_points) {
  if (max_weight < 1) throw Error("max-flow min-cut box bound must be >= 1");
  const std::size_t n = c.num_vertices();
  if (box_size(n, max_weight, max_box_points) > max_box_points) {
    throw InstanceTooLarge("max-flow min-cut box {0.." + std::to_string(max_weight) + "}^" + std::to_string(n) +
                           " exceeds the configured limit");
  }
  auto edges = c.edge_masks();
  const auto covers = masks::minimal_covers(edges);
  MfmcResult result;
  result.bound = max_weight;
  for_each_box_point(n, max_weight, [&](const ExponentVector& w) {
    const long long tau = masks::weighted_cover_number(covers, w);
    const long long nu = masks::packing_value(edges, w, tau);
    if (nu != tau) {
      result.counterexample = MfmcCounterexample{w, tau, nu};
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace clutterlab
