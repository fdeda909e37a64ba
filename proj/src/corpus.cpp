#include "clutterlab/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "clutterlab/error.hpp"

namespace clutterlab {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return labels;
}

std::vector<VertexMask> canonical_form(std::span<const VertexMask> edges, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<VertexMask> best, image(edges.size());
  do {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      VertexMask m = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (edges[j] >> v & 1) m |= VertexMask{1} << perm[v];
      }
      image[j] = m;
    }
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

class Enumerator {
 public:
  Enumerator(const CorpusSpec& spec, const std::function<bool(const Clutter&)>& f)
      : spec_(spec), f_(f), labels_(default_labels(spec.n)) {
    for (VertexMask m = 1; m < (VertexMask{1} << spec.n); ++m) {
      if (!spec.d || static_cast<std::size_t>(std::popcount(m)) == *spec.d) candidates_.push_back(mask_to_edge(m));
    }
    std::sort(candidates_.begin(), candidates_.end());
    for (const auto& e : candidates_) candidate_masks_.push_back(edge_to_mask(e));
  }

  void run() { extend(0); }

 private:
  // Extends the current antichain with candidates at index >= from.
  bool extend(std::size_t from) {
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      const VertexMask m = candidate_masks_[i];
      bool comparable = std::any_of(chosen_.begin(), chosen_.end(), [&](VertexMask c) {
        return (c & m) == c || (c & m) == m;
      });
      if (comparable) continue;
      chosen_.push_back(m);
      chosen_edges_.push_back(candidates_[i]);
      bool go = emit();
      if (go && (spec_.q_max == 0 || chosen_.size() < spec_.q_max)) go = extend(i + 1);
      chosen_.pop_back();
      chosen_edges_.pop_back();
      if (!go) return false;
    }
    return true;
  }

  bool emit() {
    if (spec_.isomorph_reject && !seen_.insert(canonical_form(chosen_, spec_.n)).second) return true;
    return f_(Clutter::minimal_from(labels_, chosen_edges_));
  }

  const CorpusSpec& spec_;
  const std::function<bool(const Clutter&)>& f_;
  std::vector<std::string> labels_;
  std::vector<Edge> candidates_;
  std::vector<VertexMask> candidate_masks_;
  std::vector<VertexMask> chosen_;
  std::vector<Edge> chosen_edges_;
  std::set<std::vector<VertexMask>> seen_;
};

}  // namespace

void for_each_clutter(const CorpusSpec& spec, const std::function<bool(const Clutter&)>& f) {
  if (spec.n > kMaxCorpusVertices) {
    throw InstanceTooLarge("corpus enumeration limited to n <= " + std::to_string(kMaxCorpusVertices));
  }
  if (spec.d && (*spec.d == 0 || *spec.d > spec.n)) return;
  Enumerator(spec, f).run();
}

std::vector<Clutter> enumerate_clutters(const CorpusSpec& spec) {
  std::vector<Clutter> out;
  for_each_clutter(spec, [&](const Clutter& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace clutterlab
