#include "clutterlab/clutter.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "clutterlab/error.hpp"

namespace clutterlab {

// ---------------------------------------------------------------- ExponentVector

ExponentVector::ExponentVector(std::size_t n, int fill) : entries_(n, fill) {
  if (fill < 0) throw Error("exponent vector entries must be non-negative");
}

ExponentVector::ExponentVector(std::initializer_list<int> values) : ExponentVector(std::vector<int>(values)) {}

ExponentVector::ExponentVector(std::vector<int> values) : entries_(std::move(values)) {
  for (int v : entries_) {
    if (v < 0) throw Error("exponent vector entries must be non-negative");
  }
}

void ExponentVector::set(std::size_t i, int value) {
  if (value < 0) throw Error("exponent vector entries must be non-negative");
  entries_.at(i) = value;
}

long long ExponentVector::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0LL); }

std::string to_string(const ExponentVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::vector<int> IncidenceMatrix::column(std::size_t j) const {
  std::vector<int> col(rows_);
  for (std::size_t i = 0; i < rows_; ++i) col[i] = (*this)(i, j);
  return col;
}

// ---------------------------------------------------------------- set helpers

void canonicalize_edges(std::vector<Edge>& edges) {
  for (auto& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
}

namespace {

bool is_subset(const Edge& a, const Edge& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::string edge_string(const std::vector<std::string>& labels, const Edge& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += labels[e[i]];
  }
  return out + "}";
}

// Label "x1#3" has base "x1"; labels without a numeric '#' suffix are their own base.
std::string copy_base(const std::string& label) {
  auto pos = label.rfind('#');
  if (pos == std::string::npos || pos + 1 == label.size()) return label;
  for (std::size_t i = pos + 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) return label;
  }
  return label.substr(0, pos);
}

std::string fresh_label(std::string candidate, const std::unordered_set<std::string>& taken) {
  while (taken.count(candidate)) candidate += "'";
  return candidate;
}

std::unordered_set<std::string> label_set(const std::vector<std::string>& labels) {
  return {labels.begin(), labels.end()};
}

}  // namespace

std::vector<Edge> minimal_sets(std::vector<Edge> sets) {
  canonicalize_edges(sets);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // Shorter sets first so every potential subset is seen before its supersets.
  std::vector<std::size_t> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sets[a].size() < sets[b].size(); });
  std::vector<Edge> kept;
  for (std::size_t idx : order) {
    const Edge& s = sets[idx];
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Edge& k) { return is_subset(k, s); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<VertexMask> minimal_masks(std::vector<VertexMask> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexMask a, VertexMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexMask> kept;
  for (VertexMask s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](VertexMask k) { return (k & s) == k; });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

Edge mask_to_edge(VertexMask m) {
  Edge e;
  while (m) {
    e.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return e;
}

VertexMask edge_to_mask(const Edge& e) {
  VertexMask m = 0;
  for (Vertex v : e) m |= VertexMask{1} << v;
  return m;
}

bool is_antichain(const std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i != j && is_subset(edges[i], edges[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- Clutter

Clutter::Clutter(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error("empty vertex label");
    if (!seen.insert(l).second) throw Error("duplicate vertex label '" + l + "'");
  }
  for (auto& e : edges_) {
    if (e.empty()) throw UnitIdeal("empty edge");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw Error("repeated vertex in edge");
    if (e.back() >= labels_.size()) throw UnknownVertex("edge refers to vertex index " + std::to_string(e.back()));
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t j = 1; j < edges_.size(); ++j) {
    if (edges_[j] == edges_[j - 1]) throw DuplicateEdge("duplicate edge " + edge_string(labels_, edges_[j]));
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if (i != j && is_subset(edges_[i], edges_[j])) {
        throw AntichainViolation("edge " + edge_string(labels_, edges_[i]) + " is contained in edge " +
                                 edge_string(labels_, edges_[j]));
      }
    }
  }
}

Clutter Clutter::minimal_from(std::vector<std::string> labels, std::vector<Edge> sets) {
  for (const auto& s : sets) {
    if (s.empty()) throw UnitIdeal("an edge became empty; the result is the unit ideal");
  }
  auto minimal = minimal_sets(std::move(sets));
  std::vector<bool> used(labels.size(), false);
  for (const auto& e : minimal) {
    for (Vertex v : e) used.at(v) = true;
  }
  std::vector<Vertex> remap(labels.size(), 0);
  std::vector<std::string> kept;
  std::vector<std::string> dropped;
  for (Vertex v = 0; v < labels.size(); ++v) {
    if (used[v]) {
      remap[v] = kept.size();
      kept.push_back(std::move(labels[v]));
    } else {
      dropped.push_back(std::move(labels[v]));
    }
  }
  for (auto& e : minimal) {
    for (auto& v : e) v = remap[v];
  }
  Clutter out(std::move(kept), std::move(minimal));
  out.dropped_ = std::move(dropped);
  return out;
}

std::optional<Vertex> Clutter::find(std::string_view label) const {
  for (Vertex v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

Vertex Clutter::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw UnknownVertex("unknown vertex '" + std::string(label) + "'");
}

std::vector<Vertex> Clutter::isolated_vertices() const {
  std::vector<bool> used(labels_.size(), false);
  for (const auto& e : edges_) {
    for (Vertex v : e) used[v] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < labels_.size(); ++v) {
    if (!used[v]) out.push_back(v);
  }
  return out;
}

std::size_t Clutter::degree(Vertex v) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return std::binary_search(e.begin(), e.end(), v);
  }));
}

Clutter Clutter::without_isolated() const { return minimal_from(labels_, edges_); }

std::vector<VertexMask> Clutter::edge_masks() const {
  if (labels_.size() > kMaxMaskVertices) {
    throw InstanceTooLarge("clutter has " + std::to_string(labels_.size()) + " vertices; at most 64 supported");
  }
  std::vector<VertexMask> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(edge_to_mask(e));
  return out;
}

VertexMask Clutter::all_vertices_mask() const {
  if (labels_.size() > kMaxMaskVertices) {
    throw InstanceTooLarge("clutter has " + std::to_string(labels_.size()) + " vertices; at most 64 supported");
  }
  return labels_.size() == 64 ? ~VertexMask{0} : (VertexMask{1} << labels_.size()) - 1;
}

// ---------------------------------------------------------------- text format

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> split_tokens(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = offset;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

}  // namespace

Clutter parse_clutter(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  bool have_vertices = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (first == line.size() || line[first] == '#') continue;

    std::string_view rest = line.substr(first);
    if (rest.starts_with("v:")) {
      if (have_vertices) throw ParseError(line_no, first + 1, "second vertex line");
      have_vertices = true;
      for (auto& tok : split_tokens(line, first + 2)) {
        if (index.count(tok.text)) throw ParseError(line_no, tok.column, "duplicate vertex label '" + tok.text + "'");
        index.emplace(tok.text, labels.size());
        labels.push_back(tok.text);
      }
      if (labels.empty()) throw ParseError(line_no, first + 3, "vertex line lists no vertices");
    } else if (rest.starts_with("e:")) {
      if (!have_vertices) throw ParseError(line_no, first + 1, "edge line before vertex line");
      Edge e;
      for (auto& tok : split_tokens(line, first + 2)) {
        auto it = index.find(tok.text);
        if (it == index.end()) throw ParseError(line_no, tok.column, "unknown vertex '" + tok.text + "'");
        if (std::find(e.begin(), e.end(), it->second) != e.end()) {
          throw ParseError(line_no, tok.column, "vertex '" + tok.text + "' repeated in edge");
        }
        e.push_back(it->second);
      }
      if (e.empty()) throw ParseError(line_no, first + 3, "empty edge");
      edges.push_back(std::move(e));
      edge_lines.push_back(line_no);
    } else {
      throw ParseError(line_no, first + 1, "expected 'v:' or 'e:'");
    }
  }
  if (!have_vertices) throw ParseError(line_no, 1, "missing vertex line");
  return Clutter(std::move(labels), std::move(edges));
}

std::string serialize_clutter(const Clutter& c) {
  std::string out = "v:";
  for (const auto& l : c.labels()) out += " " + l;
  out += "\n";
  for (const auto& e : c.edges()) {
    out += "e:";
    for (Vertex v : e) out += " " + c.label(v);
    out += "\n";
  }
  return out;
}

std::string edge_list_string(const Clutter& c) {
  std::string out;
  for (const auto& e : c.edges()) {
    if (!out.empty()) out += " ";
    out += edge_string(c.labels(), e);
  }
  return out;
}

std::string vertex_set_string(const Clutter& c, std::span<const Vertex> vertices) {
  return edge_string(c.labels(), Edge(vertices.begin(), vertices.end()));
}

IncidenceMatrix incidence_matrix(const Clutter& c) {
  IncidenceMatrix a(c.num_vertices(), c.num_edges());
  for (std::size_t j = 0; j < c.num_edges(); ++j) {
    for (Vertex v : c.edge(j)) a.set(v, j, 1);
  }
  return a;
}

// ---------------------------------------------------------------- transformations

Clutter minor(const Clutter& c, std::span<const Vertex> deleted, std::span<const Vertex> contracted) {
  const std::size_t n = c.num_vertices();
  std::vector<char> role(n, 0);  // 1 = deleted, 2 = contracted
  for (Vertex v : deleted) {
    if (v >= n) throw UnknownVertex("deleted vertex index out of range");
    role[v] = 1;
  }
  for (Vertex v : contracted) {
    if (v >= n) throw UnknownVertex("contracted vertex index out of range");
    if (role[v] == 1) throw Error("vertex '" + c.label(v) + "' is both deleted and contracted");
    role[v] = 2;
  }
  std::vector<Edge> survivors;
  for (const auto& e : c.edges()) {
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return role[v] == 1; })) continue;
    Edge shrunk;
    for (Vertex v : e) {
      if (role[v] == 0) shrunk.push_back(v);
    }
    if (shrunk.empty()) throw UnitIdeal("contraction empties edge " + edge_string(c.labels(), e));
    survivors.push_back(std::move(shrunk));
  }
  // Removed vertices lie in no surviving edge, so minimal_from drops them.
  return Clutter::minimal_from(c.labels(), std::move(survivors));
}

Clutter duplicate(const Clutter& c, Vertex vertex) {
  if (vertex >= c.num_vertices()) throw UnknownVertex("vertex index out of range");
  if (c.degree(vertex) == 0) throw Error("cannot duplicate isolated vertex '" + c.label(vertex) + "'");
  auto labels = c.labels();
  const std::string base = copy_base(labels[vertex]);
  auto taken = label_set(labels);
  int k = 2;
  while (taken.count(base + "#" + std::to_string(k))) ++k;
  const Vertex copy = labels.size();
  labels.push_back(base + "#" + std::to_string(k));

  std::vector<Edge> edges = c.edges();
  for (const auto& e : c.edges()) {
    if (!std::binary_search(e.begin(), e.end(), vertex)) continue;
    Edge f;
    for (Vertex v : e) f.push_back(v == vertex ? copy : v);
    edges.push_back(std::move(f));
  }
  return Clutter::minimal_from(std::move(labels), std::move(edges));
}

Clutter parallelization(const Clutter& c, const ExponentVector& w) {
  const std::size_t n = c.num_vertices();
  if (w.size() != n) throw Error("weight vector length " + std::to_string(w.size()) + " != " + std::to_string(n));

  std::vector<std::string> labels;
  // copies[i][j] = new index of the (j+1)-th copy of vertex i
  std::vector<std::vector<Vertex>> copies(n);
  for (Vertex i = 0; i < n; ++i) {
    if (w[i] >= 1) {
      copies[i].push_back(labels.size());
      labels.push_back(c.label(i));
    }
  }
  for (Vertex i = 0; i < n; ++i) {
    const std::string base = copy_base(c.label(i));
    for (int j = 2; j <= w[i]; ++j) {
      copies[i].push_back(labels.size());
      labels.push_back(base + "#" + std::to_string(j));
    }
  }

  std::vector<Edge> edges;
  for (const auto& e : c.edges()) {
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return w[v] == 0; })) continue;
    // Every choice of one copy per vertex of e, odometer style.
    std::vector<std::size_t> pick(e.size(), 0);
    bool more = true;
    while (more) {
      Edge f(e.size());
      for (std::size_t t = 0; t < e.size(); ++t) f[t] = copies[e[t]][pick[t]];
      edges.push_back(std::move(f));
      more = false;
      for (std::size_t t = e.size(); t-- > 0;) {
        if (++pick[t] < copies[e[t]].size()) {
          more = true;
          break;
        }
        pick[t] = 0;
      }
    }
  }
  return Clutter::minimal_from(std::move(labels), std::move(edges));
}

std::optional<std::size_t> is_uniform(const Clutter& c) {
  if (c.empty()) return std::nullopt;
  const std::size_t d = c.edge(0).size();
  for (const auto& e : c.edges()) {
    if (e.size() != d) return std::nullopt;
  }
  return d;
}

Clutter graft(const Clutter& c) {
  auto d = is_uniform(c);
  if (!d) throw NotUniform("graft requires a uniform clutter");
  auto labels = c.labels();
  auto taken = label_set(labels);
  std::vector<Edge> edges = c.edges();
  const std::size_t n = c.num_vertices();
  for (Vertex i = 0; i < n; ++i) {
    Edge whisker{i};
    for (std::size_t j = 1; j < *d; ++j) {
      std::string name = fresh_label("y" + std::to_string(i + 1) + "_" + std::to_string(j), taken);
      taken.insert(name);
      whisker.push_back(labels.size());
      labels.push_back(std::move(name));
    }
    edges.push_back(std::move(whisker));
  }
  // With d = 1 the new edges repeat old ones; minimal_from collapses them.
  return Clutter::minimal_from(std::move(labels), std::move(edges));
}

Clutter adjoin_whisker_edge(const Clutter& c, Vertex vertex, std::size_t length) {
  if (vertex >= c.num_vertices()) throw UnknownVertex("vertex index out of range");
  if (length == 0) throw Error("whisker length must be positive");
  auto labels = c.labels();
  auto taken = label_set(labels);
  Edge whisker{vertex};
  for (std::size_t j = 1; j <= length; ++j) {
    std::string name = fresh_label("z" + std::to_string(j), taken);
    taken.insert(name);
    whisker.push_back(labels.size());
    labels.push_back(std::move(name));
  }
  std::vector<Edge> edges = c.edges();
  edges.push_back(std::move(whisker));
  return Clutter::minimal_from(std::move(labels), std::move(edges));
}

}  // namespace clutterlab
