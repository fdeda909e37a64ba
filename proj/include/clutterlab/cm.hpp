#pragma once

// Cohen-Macaulayness of R/I(C), decided on the independence complex (the
// Stanley-Reisner complex of I(C)) by Reisner's criterion: every link lk(F),
// F included, has vanishing reduced homology below its top dimension.

#include <cstddef>
#include <optional>
#include <utility>

#include "clutterlab/clutter.hpp"
#include "clutterlab/simplicial.hpp"

namespace clutterlab {

inline constexpr std::size_t kDefaultCmVertexLimit = 16;

/// Facets are the maximal independent sets (complements of minimal covers).
SimplicialComplex independence_complex(const Clutter& c, std::size_t max_vertices = kDefaultCmVertexLimit);

struct LinkFailure {
  Edge face;            // F
  int dimension = 0;    // i < dim lk(F)
  std::size_t betti = 0;
};

struct CmVerdict {
  bool cohen_macaulay = true;
  Field field;
  /// Set when the minimal covers have different sizes.
  std::optional<std::pair<Edge, Edge>> unmixed_witness;
  std::optional<LinkFailure> link_failure;
};

/// Faces are scanned by size, then lexicographically, so the reported link
/// failure is deterministic.
CmVerdict is_cohen_macaulay(const Clutter& c, Field field = Field::rationals(),
                            std::size_t max_vertices = kDefaultCmVertexLimit);

}  // namespace clutterlab
