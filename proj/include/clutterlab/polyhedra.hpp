#pragma once

// The set covering polyhedron Q(A) = {x >= 0 : xA >= 1}, the covering and
// packing programs of the LP-duality equation, and bounded max-flow min-cut
// certification.

#include <cstddef>
#include <optional>
#include <vector>

#include "clutterlab/clutter.hpp"
#include "clutterlab/lp.hpp"

namespace clutterlab {

/// min <w,x> s.t. sum_{i in e} x_i >= 1 for every edge, x >= 0.
LinearProgram covering_lp(const Clutter& c, const ExponentVector& w);
/// max <y,1> s.t. Ay <= w, y >= 0.
LinearProgram packing_lp(const Clutter& c, const ExponentVector& w);

struct IntegerSolution {
  long long value = 0;
  std::vector<long long> point;
};

/// Integral covering optimum via branch-and-bound on the exact LP relaxation.
IntegerSolution solve_covering_ilp(const Clutter& c, const ExponentVector& w);

/// max{<y,1> : y in N^q, Ay <= w} by depth-first branch-and-bound over edge
/// multiplicities.
IntegerSolution solve_packing_ilp(const Clutter& c, const ExponentVector& w);

struct PolyhedronVertexSet {
  std::vector<std::vector<Rational>> vertices;  // lexicographically sorted
  std::vector<bool> integral;
};

inline constexpr std::size_t kDefaultQVertexLimit = 12;

/// Every vertex of Q(A), found by solving each nonsingular choice of n tight
/// constraints and keeping the feasible solutions.
PolyhedronVertexSet enumerate_Q_vertices(const Clutter& c, std::size_t max_vertices = kDefaultQVertexLimit);

struct IdealVerdict {
  bool ideal = true;
  std::optional<std::vector<Rational>> fractional_vertex;
  PolyhedronVertexSet vertices;
};

/// Q(A) integral? When it is, also confirms that its vertices are exactly the
/// characteristic vectors of the minimal vertex covers (throws Error if not).
IdealVerdict is_ideal_clutter(const Clutter& c, std::size_t max_vertices = kDefaultQVertexLimit);

struct MfmcCounterexample {
  ExponentVector w;
  long long cover_value = 0;    // alpha_0(C^w)
  long long packing_value = 0;  // max{<y,1> : y in N^q, Ay <= w}
};

struct MfmcResult {
  int bound = 0;
  std::optional<MfmcCounterexample> counterexample;
  bool certified() const { return !counterexample; }
};

inline constexpr int kDefaultMfmcBound = 3;
inline constexpr std::size_t kDefaultMaxBoxPoints = std::size_t{1} << 22;

/// Compares the covering and packing integer optima for every w in {0..W}^n
/// (lexicographic order). A certified result only covers the box.
MfmcResult mfmc_bounded(const Clutter& c, int max_weight = kDefaultMfmcBound,
                        std::size_t max_box_points = kDefaultMaxBoxPoints);

/// Calls f(w) for every w in {0..max}^n in lexicographic order until f returns false.
template <class F>
void for_each_box_point(std::size_t n, int max, F&& f) {
  std::vector<int> w(n, 0);
  while (true) {
    if (!f(ExponentVector(w))) return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (w[i] < max) {
        ++w[i];
        break;
      }
      w[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

std::size_t box_size(std::size_t n, int max, std::size_t cap);

namespace masks {
/// Packing optimum on bitmask edges; stops early once `upper` is reached.
long long packing_value(std::span<const VertexMask> edges, const ExponentVector& w, long long upper,
                        std::vector<long long>* point = nullptr);
}  // namespace masks

}  // namespace clutterlab
