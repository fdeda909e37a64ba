#pragma once

// Normality and normal torsion-freeness of edge ideals.
//
// The Rees algebra R[It] is the semigroup ring of N A' with
// A' = {(v_1,1), ..., (v_q,1), e_1, ..., e_n} in Z^{n+1}; it is normal iff
// N A' equals the lattice points of the cone R_+ A'. The Hilbert basis of that
// cone is the finite witness set for the comparison.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clutterlab/clutter.hpp"

namespace clutterlab {

/// Point of Z^{n+1}; the last coordinate is the Rees degree (t-exponent).
using LatticePoint = std::vector<long long>;

struct ReesCone {
  std::size_t n = 0;
  /// (v_j, 1) in canonical edge order, then e_1, ..., e_n.
  std::vector<LatticePoint> generators;
};

ReesCone rees_cone(const Clutter& c);

struct HilbertBasis {
  /// Sorted by Rees degree, then lexicographically.
  std::vector<LatticePoint> elements;
  /// Primitive inward facet normals of the cone (sorted).
  std::vector<LatticePoint> facets;
};

struct HilbertBasisLimits {
  std::size_t max_vertices = 8;
  std::size_t max_edges = 12;
};

HilbertBasis hilbert_basis(const ReesCone& cone, const HilbertBasisLimits& limits = {});

/// True if x lies in the cone described by inward facet normals.
bool in_cone(std::span<const LatticePoint> facets, std::span<const long long> x);

struct NormalityVerdict {
  bool normal = true;
  /// (a, b) with x^a t^b in the integral closure of I^b but not in I^b.
  std::optional<LatticePoint> witness;
  HilbertBasis basis;
};

NormalityVerdict is_normal(const Clutter& c, const HilbertBasisLimits& limits = {});

/// a in i * conv(v_1..v_q) + R_+^n, decided by an exact LP feasibility test.
bool integral_closure_membership(const Clutter& c, const ExponentVector& a, int i);
/// a >= v_{j1} + ... + v_{ji} for some multiset of i edges.
bool power_membership(const Clutter& c, const ExponentVector& a, int i);
/// sum_{x_j in C} a_j >= i for every minimal vertex cover C.
bool symbolic_power_membership(const Clutter& c, const ExponentVector& a, int i);

struct PowerCounterexample {
  ExponentVector a;
  int power = 0;
};

struct PowerCheck {
  int bound = 0;
  std::optional<PowerCounterexample> counterexample;
  bool certified() const { return !counterexample; }
};

inline constexpr int kDefaultPowerBound = 3;

/// For i = 1..k, the lexicographically first a in {0..i}^n lying in the
/// integral closure of I^i but not in I^i.
PowerCheck is_normal_bounded(const Clutter& c, int k = kDefaultPowerBound);
/// For i = 1..k, the lexicographically first a in {0..i}^n lying in the
/// symbolic power I^(i) but not in I^i.
PowerCheck is_ntf_bounded(const Clutter& c, int k = kDefaultPowerBound);

/// "x1^1*x3^2 t^b"; zero exponents are omitted and the empty product is "1".
std::string monomial_string(const Clutter& c, std::span<const long long> a, long long b);
std::string monomial_string(const Clutter& c, const ExponentVector& a, long long b);

}  // namespace clutterlab
