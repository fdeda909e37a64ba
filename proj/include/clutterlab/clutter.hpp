#pragma once

// Clutters (simple hypergraphs, equivalently square-free monomial ideals) and
// the structural transformations on them: minors, duplication,
// parallelization, grafting and whisker edges.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clutterlab {

using Vertex = std::size_t;
/// Sorted, duplicate-free list of vertex indices.
using Edge = std::vector<Vertex>;
/// Bit i set <=> vertex i present. Algorithms that use masks require n <= 64.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxMaskVertices = 64;

/// Non-negative integer vector indexed by vertices: monomial exponents,
/// parallelization weights, right-hand sides.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n, int fill = 0);
  ExponentVector(std::initializer_list<int> values);
  explicit ExponentVector(std::vector<int> values);

  static ExponentVector ones(std::size_t n) { return ExponentVector(n, 1); }
  static ExponentVector zeros(std::size_t n) { return ExponentVector(n, 0); }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, int value);
  const std::vector<int>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  long long sum() const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> entries_;
};

std::string to_string(const ExponentVector& v);

/// 0/1 matrix with one row per vertex and one column per edge.
class IncidenceMatrix {
 public:
  IncidenceMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, int v) { data_[i * cols_ + j] = v; }
  std::vector<int> column(std::size_t j) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<int> data_;
};

class Clutter {
 public:
  /// The empty clutter: no vertices, no edges.
  Clutter() = default;

  /// Strict constructor. Edges must be nonempty, pairwise distinct and pairwise
  /// incomparable; labels must be unique. Vertices in no edge are kept (they
  /// count as explicitly declared isolated vertices). Edges are canonicalized.
  Clutter(std::vector<std::string> labels, std::vector<Edge> edges);

  /// Builds the clutter of minimal members of `sets`: duplicates and
  /// non-minimal sets are discarded, vertices left in no edge are dropped and
  /// recorded in dropped_vertices(). Throws UnitIdeal if a set is empty.
  static Clutter minimal_from(std::vector<std::string> labels, std::vector<Edge> sets);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t j) const { return edges_.at(j); }

  std::optional<Vertex> find(std::string_view label) const;
  /// Index of `label`; throws UnknownVertex.
  Vertex index_of(std::string_view label) const;

  std::vector<Vertex> isolated_vertices() const;
  std::size_t degree(Vertex v) const;
  Clutter without_isolated() const;

  /// Labels of vertices dropped while this clutter was built (not part of
  /// equality).
  const std::vector<std::string>& dropped_vertices() const { return dropped_; }

  /// Edge bitmasks in canonical order. Throws InstanceTooLarge if n > 64.
  std::vector<VertexMask> edge_masks() const;
  VertexMask all_vertices_mask() const;

  friend bool operator==(const Clutter& a, const Clutter& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::string> dropped_;
};

/// Sorts each edge and the edge list lexicographically.
void canonicalize_edges(std::vector<Edge>& edges);

/// Reduces a family of sets to its inclusion-minimal members (deduplicated,
/// canonical order).
std::vector<Edge> minimal_sets(std::vector<Edge> sets);
std::vector<VertexMask> minimal_masks(std::vector<VertexMask> sets);

Edge mask_to_edge(VertexMask m);
VertexMask edge_to_mask(const Edge& e);

/// Parses the line-based clutter format:
///   # comment
///   v: x1 x2 x3
///   e: x1 x2
Clutter parse_clutter(std::string_view text);
std::string serialize_clutter(const Clutter& c);
/// One-line rendering, e.g. "{x1,x2} {x2,x3}".
std::string edge_list_string(const Clutter& c);
std::string vertex_set_string(const Clutter& c, std::span<const Vertex> vertices);

IncidenceMatrix incidence_matrix(const Clutter& c);

/// Deletes `deleted` (drops every edge meeting it) and contracts `contracted`
/// (removes those vertices from surviving edges), then minimalizes.
/// Throws UnitIdeal if an edge becomes empty.
Clutter minor(const Clutter& c, std::span<const Vertex> deleted, std::span<const Vertex> contracted);

/// Appends a copy `x#k` of `vertex` and a copy of every edge through it.
Clutter duplicate(const Clutter& c, Vertex vertex);

/// C^w: vertices with w_i = 0 are deleted, vertex i gets w_i - 1 copies
/// labelled `xi#2`, ..., `xi#w_i` (appended after the surviving originals).
Clutter parallelization(const Clutter& c, const ExponentVector& w);

/// For a d-uniform clutter, adds for each vertex x_i a new edge
/// {x_i, y_i_1, ..., y_i_(d-1)} on fresh vertices. Throws NotUniform.
Clutter graft(const Clutter& c);

/// Adds fresh vertices z1..z_length and the edge {vertex, z1, ..., z_length}.
Clutter adjoin_whisker_edge(const Clutter& c, Vertex vertex, std::size_t length);

/// d if every edge has exactly d vertices. The empty clutter is not uniform.
std::optional<std::size_t> is_uniform(const Clutter& c);

/// Antichain check used by tests and debug assertions.
bool is_antichain(const std::vector<Edge>& edges);

}  // namespace clutterlab
