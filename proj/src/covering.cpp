#include "clutterlab/covering.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

#include "clutterlab/error.hpp"

namespace clutterlab {

namespace masks {

namespace {

void collect_covers(std::span<const VertexMask> edges, VertexMask chosen, VertexMask forbidden,
                    std::vector<VertexMask>& out) {
  auto uncovered = std::find_if(edges.begin(), edges.end(), [&](VertexMask e) { return (e & chosen) == 0; });
  if (uncovered == edges.end()) {
    out.push_back(chosen);
    return;
  }
  // Branch i takes the i-th vertex of the edge and forbids the earlier ones,
  // so no cover is generated twice.
  VertexMask candidates = *uncovered & ~forbidden;
  VertexMask tried = 0;
  while (candidates) {
    VertexMask v = candidates & -candidates;
    collect_covers(edges, chosen | v, forbidden | tried, out);
    tried |= v;
    candidates &= candidates - 1;
  }
}

bool is_minimal_cover(std::span<const VertexMask> edges, VertexMask cover) {
  VertexMask private_vertices = 0;
  for (VertexMask e : edges) {
    VertexMask hit = e & cover;
    if (std::popcount(hit) == 1) private_vertices |= hit;
  }
  return private_vertices == cover;
}

void min_cover_search(std::span<const VertexMask> edges, VertexMask chosen, std::size_t size, std::size_t& best) {
  if (size >= best) return;
  // Lower bound: a greedy set of pairwise disjoint uncovered edges needs one vertex each.
  std::size_t lb = 0;
  VertexMask used = 0;
  const VertexMask* first = nullptr;
  for (const VertexMask& e : edges) {
    if (e & chosen) continue;
    if (!first) first = &e;
    if ((e & used) == 0) {
      used |= e;
      ++lb;
    }
  }
  if (!first) {
    best = size;
    return;
  }
  if (size + lb >= best) return;
  VertexMask candidates = *first;
  while (candidates) {
    VertexMask v = candidates & -candidates;
    min_cover_search(edges, chosen | v, size + 1, best);
    candidates &= candidates - 1;
  }
}

void max_matching_search(std::vector<VertexMask> remaining, std::size_t count, std::size_t& best) {
  if (remaining.empty()) {
    best = std::max(best, count);
    return;
  }
  VertexMask support = 0;
  int min_size = std::numeric_limits<int>::max();
  for (VertexMask e : remaining) {
    support |= e;
    min_size = std::min(min_size, std::popcount(e));
  }
  std::size_t ub = std::min<std::size_t>(remaining.size(), std::popcount(support) / min_size);
  if (count + ub <= best) return;

  VertexMask e = remaining.front();
  std::vector<VertexMask> with;
  for (std::size_t i = 1; i < remaining.size(); ++i) {
    if ((remaining[i] & e) == 0) with.push_back(remaining[i]);
  }
  max_matching_search(std::move(with), count + 1, best);
  remaining.erase(remaining.begin());
  max_matching_search(std::move(remaining), count, best);
}

}  // namespace

std::vector<VertexMask> minimal_covers(std::span<const VertexMask> edges) {
  std::vector<VertexMask> raw;
  collect_covers(edges, 0, 0, raw);
  std::vector<VertexMask> out;
  for (VertexMask c : raw) {
    if (is_minimal_cover(edges, c)) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t covering_number(std::span<const VertexMask> edges) {
  if (edges.empty()) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  min_cover_search(edges, 0, 0, best);
  return best;
}

std::size_t matching_number(std::span<const VertexMask> edges) {
  if (edges.empty()) return 0;
  // Greedy pass seeds the bound.
  std::size_t best = 0;
  VertexMask used = 0;
  for (VertexMask e : edges) {
    if ((e & used) == 0) {
      used |= e;
      ++best;
    }
  }
  max_matching_search(std::vector<VertexMask>(edges.begin(), edges.end()), 0, best);
  return best;
}

long long weighted_cover_number(std::span<const VertexMask> covers, const ExponentVector& w) {
  long long best = std::numeric_limits<long long>::max();
  for (VertexMask c : covers) {
    long long s = 0;
    for (VertexMask m = c; m; m &= m - 1) s += w[std::countr_zero(m)];
    best = std::min(best, s);
  }
  return covers.empty() ? 0 : best;
}

}  // namespace masks

CoverFamily minimal_vertex_covers(const Clutter& c) {
  auto edges = c.edge_masks();
  CoverFamily out;
  for (VertexMask m : masks::minimal_covers(edges)) out.covers.push_back(mask_to_edge(m));
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

std::size_t covering_number(const Clutter& c) { return masks::covering_number(c.edge_masks()); }

std::size_t matching_number(const Clutter& c) { return masks::matching_number(c.edge_masks()); }

bool has_konig(const Clutter& c) {
  auto edges = c.edge_masks();
  return masks::covering_number(edges) == masks::matching_number(edges);
}

long long weighted_cover_number(const Clutter& c, const ExponentVector& w) {
  if (w.size() != c.num_vertices()) throw Error("weight vector length does not match vertex count");
  auto edges = c.edge_masks();
  return masks::weighted_cover_number(masks::minimal_covers(edges), w);
}

// ---------------------------------------------------------------- packing property

namespace {

struct StateHash {
  std::size_t operator()(const std::vector<VertexMask>& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (VertexMask x : v) {
      h ^= std::hash<VertexMask>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

enum class Choice : char { keep, remove, contract };

class MinorScan {
 public:
  explicit MinorScan(std::size_t n) : n_(n), choice_(n, Choice::keep), seen_(n + 1) {}

  // Returns true when a non-Konig minor was found; choice_ then holds its assignment.
  bool run(std::vector<VertexMask> edges, std::size_t depth) {
    if (!seen_[depth].insert(edges).second) return false;
    if (depth == n_) {
      return masks::covering_number(edges) != masks::matching_number(edges);
    }
    const VertexMask bit = VertexMask{1} << depth;
    const bool touches = std::any_of(edges.begin(), edges.end(), [&](VertexMask e) { return e & bit; });

    choice_[depth] = Choice::keep;
    if (run(edges, depth + 1)) return true;
    // A vertex in no edge gives the same minor for all three choices.
    if (!touches) return false;

    std::vector<VertexMask> deleted;
    for (VertexMask e : edges) {
      if (!(e & bit)) deleted.push_back(e);
    }
    choice_[depth] = Choice::remove;
    if (run(std::move(deleted), depth + 1)) return true;

    std::vector<VertexMask> contracted;
    for (VertexMask e : edges) {
      VertexMask f = e & ~bit;
      if (f == 0) return false;  // unit ideal here and in every extension
      contracted.push_back(f);
    }
    choice_[depth] = Choice::contract;
    if (run(masks_sorted(minimal_masks(std::move(contracted))), depth + 1)) return true;
    choice_[depth] = Choice::keep;
    return false;
  }

  const std::vector<Choice>& choices() const { return choice_; }

  static std::vector<VertexMask> masks_sorted(std::vector<VertexMask> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

 private:
  std::size_t n_;
  std::vector<Choice> choice_;
  std::vector<std::unordered_set<std::vector<VertexMask>, StateHash>> seen_;
};

}  // namespace

PackingVerdict has_packing_property(const Clutter& c, std::size_t max_vertices) {
  if (c.num_vertices() > max_vertices) {
    throw InstanceTooLarge("packing property check limited to " + std::to_string(max_vertices) + " vertices, got " +
                           std::to_string(c.num_vertices()));
  }
  auto edges = c.edge_masks();
  std::sort(edges.begin(), edges.end());
  MinorScan scan(c.num_vertices());
  PackingVerdict verdict;
  if (!scan.run(edges, 0)) return verdict;

  PackingWitness w;
  for (Vertex v = 0; v < c.num_vertices(); ++v) {
    if (scan.choices()[v] == Choice::remove) w.deleted.push_back(v);
    if (scan.choices()[v] == Choice::contract) w.contracted.push_back(v);
  }
  w.minor = minor(c, w.deleted, w.contracted);
  w.alpha0 = covering_number(w.minor);
  w.beta1 = matching_number(w.minor);
  verdict.holds = false;
  verdict.witness = std::move(w);
  return verdict;
}

}  // namespace clutterlab
