#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "clutterlab/clutter.hpp"

namespace clutterlab {

/// Coefficient field: the rationals (prime == 0) or GF(prime).
struct Field {
  std::uint32_t prime = 0;

  static Field rationals() { return {0}; }
  static Field gf(std::uint32_t p) { return {p}; }
  bool is_rationals() const { return prime == 0; }
  friend bool operator==(const Field&, const Field&) = default;
};

/// "q" or "f<p>".
std::string to_string(Field f);
Field parse_field(const std::string& name);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Facets are reduced to the inclusion-maximal ones. An empty facet list
  /// gives the complex {emptyset}.
  SimplicialComplex(std::size_t num_vertices, std::vector<Edge> facets);

  std::size_t num_vertices() const { return num_vertices_; }
  const std::vector<Edge>& facets() const { return facets_; }
  /// -1 for {emptyset}.
  int dimension() const;
  bool contains(const Edge& face) const;
  /// All faces (including the empty face) grouped by dimension + 1.
  std::vector<std::vector<VertexMask>> faces_by_size() const;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> facets_;
};

struct HomologyProfile {
  Field field;
  /// betti[d + 1] is the reduced Betti number in dimension d, d = -1..dim.
  std::vector<std::size_t> betti;

  std::size_t reduced_betti(int d) const {
    auto idx = static_cast<std::size_t>(d + 1);
    return d >= -1 && idx < betti.size() ? betti[idx] : 0;
  }
};

HomologyProfile reduced_homology(const SimplicialComplex& complex, Field field = Field::rationals());

/// Reduced homology from faces grouped by size (index k holds the faces with
/// k vertices; index 0 must hold the empty face).
HomologyProfile reduced_homology_of_faces(const std::vector<std::vector<VertexMask>>& faces, Field field);

/// Rank of the boundary map from faces of size k to faces of size k - 1.
std::size_t boundary_rank(const std::vector<VertexMask>& faces, const std::vector<VertexMask>& lower, Field field);

}  // namespace clutterlab
