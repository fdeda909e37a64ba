#pragma once

// Exhaustive enumeration of small clutters.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "clutterlab/clutter.hpp"

namespace clutterlab {

struct CorpusSpec {
  /// Vertex set {x1, ..., xn}; stranded vertices are dropped per clutter.
  std::size_t n = 3;
  /// Only d-subsets as edges when set; otherwise every nonempty subset.
  std::optional<std::size_t> d;
  /// Maximum number of edges; 0 means unbounded.
  std::size_t q_max = 0;
  /// Keep one representative (the first enumerated) per isomorphism class.
  bool isomorph_reject = false;
};

inline constexpr std::size_t kMaxCorpusVertices = 6;

/// Calls f on every nonempty antichain in canonical order: edge lists compared
/// lexicographically, each edge a sorted index list. Stops early if f returns
/// false.
void for_each_clutter(const CorpusSpec& spec, const std::function<bool(const Clutter&)>& f);

std::vector<Clutter> enumerate_clutters(const CorpusSpec& spec);

/// Smallest sorted edge-mask list over all n! relabelings of {0..n-1}.
std::vector<VertexMask> canonical_form(std::span<const VertexMask> edges, std::size_t n);

std::vector<std::string> default_labels(std::size_t n);

}  // namespace clutterlab
