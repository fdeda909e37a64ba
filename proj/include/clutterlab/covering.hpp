#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "clutterlab/clutter.hpp"

namespace clutterlab {

/// All minimal vertex covers, each sorted, in lexicographic order.
struct CoverFamily {
  std::vector<Edge> covers;

  friend bool operator==(const CoverFamily&, const CoverFamily&) = default;
};

CoverFamily minimal_vertex_covers(const Clutter& c);

/// alpha_0: size of a smallest vertex cover. 0 for the empty clutter.
std::size_t covering_number(const Clutter& c);
/// beta_1: size of a largest set of pairwise disjoint edges.
std::size_t matching_number(const Clutter& c);
bool has_konig(const Clutter& c);

/// min over minimal covers C of sum_{i in C} w_i.
long long weighted_cover_number(const Clutter& c, const ExponentVector& w);

struct PackingWitness {
  std::vector<Vertex> deleted;
  std::vector<Vertex> contracted;
  Clutter minor;
  std::size_t alpha0 = 0;
  std::size_t beta1 = 0;
};

struct PackingVerdict {
  bool holds = true;
  std::optional<PackingWitness> witness;
};

inline constexpr std::size_t kDefaultPackingVertexLimit = 14;

/// Checks the Konig property on every minor. Assignments are scanned in
/// lexicographic order over {keep, delete, contract}^n (vertex 0 most
/// significant), so the witness is the first failing assignment.
PackingVerdict has_packing_property(const Clutter& c, std::size_t max_vertices = kDefaultPackingVertexLimit);

// Bitmask kernels shared with the polyhedra and harness code. Edge lists are
// antichains of nonempty masks.
namespace masks {

std::vector<VertexMask> minimal_covers(std::span<const VertexMask> edges);
std::size_t covering_number(std::span<const VertexMask> edges);
std::size_t matching_number(std::span<const VertexMask> edges);
long long weighted_cover_number(std::span<const VertexMask> covers, const ExponentVector& w);

}  // namespace masks

}  // namespace clutterlab
