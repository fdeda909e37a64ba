#include "clutterlab/cm.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

#include "clutterlab/covering.hpp"
#include "clutterlab/error.hpp"

namespace clutterlab {

namespace {


void check_size(const Clutter& c, std::size_t max_vertices) {
  if (c.num_vertices() > max_vertices || c.num_vertices() > kMaxMaskVertices) {
    throw InstanceTooLarge("Cohen-Macaulay check limited to " + std::to_string(max_vertices) + " vertices, got " +
                           std::to_string(c.num_vertices()));
  }
}

std::vector<std::vector<VertexMask>> faces_of(const std::vector<VertexMask>& facets) {
  std::unordered_set<VertexMask> all{0};
  int top = -1;
  for (VertexMask full : facets) {
    top = std::max(top, std::popcount(full));
    for (VertexMask s = full;; s = (s - 1) & full) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<std::vector<VertexMask>> out(static_cast<std::size_t>(std::max(top, 0) + 1));
  for (VertexMask s : all) out[std::popcount(s)].push_back(s);
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

std::vector<VertexMask> maximal_only(std::vector<VertexMask> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexMask a, VertexMask b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) > std::popcount(b) : a < b;
  });
  std::vector<VertexMask> out;
  for (VertexMask s : sets) {
    if (std::none_of(out.begin(), out.end(), [&](VertexMask t) { return (s & t) == s; })) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Removes dominated vertices (v such that every facet through v also contains
// some other vertex u) until none is left. Each removal is a strong collapse,
// so the homotopy type and hence the homology are unchanged.
std::vector<VertexMask> strong_core(std::vector<VertexMask> facets) {
  bool changed = true;
  while (changed) {
    changed = false;
    VertexMask support = 0;
    for (VertexMask f : facets) support |= f;
    for (VertexMask rest = support; rest; rest &= rest - 1) {
      const VertexMask v = rest & -rest;
      VertexMask common = ~VertexMask{0};
      for (VertexMask f : facets) {
        if (f & v) common &= f;
      }
      if (common & ~v) {
        for (auto& f : facets) f &= ~v;
        facets = maximal_only(std::move(facets));
        changed = true;
        break;
      }
    }
  }
  return facets;
}

// First dimension i < dim where the reduced homology of the complex spanned by
// `facets` is nonzero, with its Betti number.
std::optional<std::pair<int, std::size_t>> first_nonvanishing(const std::vector<VertexMask>& facets, Field field) {
  VertexMask common = facets.empty() ? 0 : ~VertexMask{0};
  int dim = -1;
  for (VertexMask f : facets) {
    common &= f;
    dim = std::max(dim, std::popcount(f) - 1);
  }
  if (dim < 1 || common != 0) return std::nullopt;  // vacuous, or a cone

  auto faces = faces_of(strong_core(facets));
  auto run = [&](Field f) {
    auto profile = reduced_homology_of_faces(faces, f);
    for (int i = -1; i < dim; ++i) {
      if (profile.reduced_betti(i) != 0) return std::optional<std::pair<int, std::size_t>>({i, profile.reduced_betti(i)});
    }
    return std::optional<std::pair<int, std::size_t>>{};
  };
  if (!field.is_rationals()) return run(field);
  // Ranks over GF(2) never exceed ranks over Q, so vanishing there certifies
  // vanishing over Q.
  if (!run(Field::gf(2))) return std::nullopt;
  return run(Field::rationals());
}

}  // namespace

SimplicialComplex independence_complex(const Clutter& c, std::size_t max_vertices) {
  check_size(c, max_vertices);
  const VertexMask all = c.all_vertices_mask();
  std::vector<Edge> facets;
  for (VertexMask cover : masks::minimal_covers(c.edge_masks())) facets.push_back(mask_to_edge(all & ~cover));
  return SimplicialComplex(c.num_vertices(), std::move(facets));
}

CmVerdict is_cohen_macaulay(const Clutter& c, Field field, std::size_t max_vertices) {
  check_size(c, max_vertices);
  CmVerdict verdict;
  verdict.field = field;

  const auto family = minimal_vertex_covers(c);
  const auto& covers = family.covers;
  for (const auto& cover : covers) {
    if (cover.size() != covers.front().size()) {
      verdict.cohen_macaulay = false;
      verdict.unmixed_witness = std::make_pair(covers.front(), cover);
      return verdict;
    }
  }

  const VertexMask all = c.all_vertices_mask();
  std::vector<VertexMask> facets;
  for (const auto& cover : covers) facets.push_back(all & ~edge_to_mask(cover));

  auto faces = faces_of(facets);
  std::map<std::vector<VertexMask>, std::optional<std::pair<int, std::size_t>>> memo;
  for (auto& level : faces) {
    std::vector<Edge> ordered;
    ordered.reserve(level.size());
    for (VertexMask f : level) ordered.push_back(mask_to_edge(f));
    std::sort(ordered.begin(), ordered.end());
    for (const auto& face : ordered) {
      const VertexMask fm = edge_to_mask(face);
      std::vector<VertexMask> link;
      for (VertexMask m : facets) {
        if ((m & fm) == fm) link.push_back(m & ~fm);
      }
      std::sort(link.begin(), link.end());
      auto it = memo.find(link);
      if (it == memo.end()) it = memo.emplace(link, first_nonvanishing(link, field)).first;
      if (it->second) {
        verdict.cohen_macaulay = false;
        verdict.link_failure = LinkFailure{face, it->second->first, it->second->second};
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace clutterlab
