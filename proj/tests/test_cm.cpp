#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gmpxx.h>

#include <bit>
#include <random>

#include "clutterlab/cm.hpp"
#include "clutterlab/covering.hpp"
#include "clutterlab/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace clutterlab;
using fixtures::parse;

namespace {

// Dense rank over Q, or over GF(p) when p > 0.
std::size_t dense_rank(std::vector<std::vector<mpq_class>> m, unsigned p) {
  auto reduce = [&](mpq_class& x) {
    if (p == 0) return;
    mpz_class num = x.get_num() % p;
    if (num < 0) num += p;
    // every entry stays integral under elimination by a unit pivot mod p
    x = num;
  };
  auto inv = [&](const mpq_class& x) -> mpq_class {
    if (p == 0) return 1 / x;
    mpz_class r;
    mpz_class v = x.get_num();
    mpz_class mod = p;
    mpz_invert(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
    return mpq_class(r);
  };
  for (auto& row : m) {
    for (auto& x : row) reduce(x);
  }
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    mpq_class f0 = inv(m[rank][c]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] * f0;
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] -= f * m[rank][k];
        reduce(m[r][k]);
      }
    }
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers of the complex generated by `facets` (masks), by
// dense boundary matrices.
std::vector<std::size_t> dense_betti(const std::vector<VertexMask>& facets, unsigned p) {
  std::set<VertexMask> all{0};
  for (VertexMask f : facets) {
    for (VertexMask s = f;; s = (s - 1) & f) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  int top = 0;
  for (VertexMask s : all) top = std::max(top, std::popcount(s));
  std::vector<std::vector<VertexMask>> level(static_cast<std::size_t>(top) + 1);
  for (VertexMask s : all) level[std::popcount(s)].push_back(s);
  std::vector<std::size_t> rank(level.size() + 1, 0);
  for (std::size_t k = 1; k < level.size(); ++k) {
    std::vector<std::vector<mpq_class>> m(level[k - 1].size(), std::vector<mpq_class>(level[k].size()));
    for (std::size_t j = 0; j < level[k].size(); ++j) {
      const VertexMask f = level[k][j];
      int sign = 1;
      for (int v = 0; v < 64; ++v) {
        if (!(f >> v & 1)) continue;
        auto it = std::lower_bound(level[k - 1].begin(), level[k - 1].end(), f & ~(VertexMask{1} << v));
        m[static_cast<std::size_t>(it - level[k - 1].begin())][j] = sign;
        sign = -sign;
      }
    }
    rank[k] = dense_rank(std::move(m), p);
  }
  std::vector<std::size_t> betti(level.size());
  for (std::size_t k = 0; k < level.size(); ++k) betti[k] = level[k].size() - rank[k] - rank[k + 1];
  return betti;
}

// Reisner's criterion straight from the definition: every face, every
// dimension below the link's top, by dense ranks.
bool reisner_oracle(const Clutter& c, unsigned p) {
  const std::size_t n = c.num_vertices();
  const VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  std::vector<VertexMask> facets;
  for (const auto& cov : oracle::minimal_covers(c)) facets.push_back(all & ~edge_to_mask(cov));
  std::set<VertexMask> faces;
  for (VertexMask f : facets) {
    for (VertexMask s = f;; s = (s - 1) & f) {
      faces.insert(s);
      if (s == 0) break;
    }
  }
  for (VertexMask face : faces) {
    std::vector<VertexMask> link;
    int dim = -1;
    for (VertexMask f : facets) {
      if ((f & face) == face) {
        link.push_back(f & ~face);
        dim = std::max(dim, std::popcount(f & ~face) - 1);
      }
    }
    auto betti = dense_betti(link, p);
    for (int i = -1; i < dim; ++i) {
      if (betti[static_cast<std::size_t>(i + 1)] != 0) return false;
    }
  }
  return true;
}

std::vector<Edge> edges_of(std::initializer_list<std::initializer_list<Vertex>> list) {
  std::vector<Edge> out;
  for (auto e : list) out.emplace_back(e);
  return out;
}

}  // namespace

TEST_CASE("fields") {
  CHECK(parse_field("q") == Field::rationals());
  CHECK(parse_field("f2") == Field::gf(2));
  CHECK(parse_field("F7") == Field::gf(7));
  CHECK(to_string(Field::gf(2)) == "f2");
  CHECK(to_string(Field::rationals()) == "q");
  CHECK_THROWS_AS(parse_field("f4"), Error);
  CHECK_THROWS_AS(parse_field("r"), Error);
}

TEST_CASE("independence complex: examples") {
  CHECK(independence_complex(fixtures::single_edge()).facets() == edges_of({{0}, {1}}));
  CHECK(independence_complex(fixtures::triangle()).facets() == edges_of({{0}, {1}, {2}}));
  // graft vertex order x1 x2 y1_1 y2_1
  auto g = independence_complex(graft(fixtures::single_edge()));
  CHECK(g.facets() == edges_of({{0, 3}, {1, 2}, {2, 3}}));
  CHECK(g.dimension() == 1);
  CHECK(g.contains({2}));
  CHECK_FALSE(g.contains({0, 1}));
  CHECK_THROWS_AS(independence_complex(fixtures::cycle(6), 5), InstanceTooLarge);
}

TEST_CASE("reduced homology: examples") {
  auto points = reduced_homology(SimplicialComplex(2, edges_of({{0}, {1}})));
  CHECK(points.reduced_betti(-1) == 0);
  CHECK(points.reduced_betti(0) == 1);

  auto hollow = reduced_homology(SimplicialComplex(3, edges_of({{0, 1}, {1, 2}, {0, 2}})));
  CHECK(hollow.reduced_betti(0) == 0);
  CHECK(hollow.reduced_betti(1) == 1);

  auto c5 = reduced_homology(independence_complex(fixtures::cycle(5)));
  CHECK(c5.reduced_betti(0) == 0);
  CHECK(c5.reduced_betti(1) == 1);

  auto empty = reduced_homology(SimplicialComplex(0, {}));
  CHECK(empty.reduced_betti(-1) == 1);

  auto simplex = reduced_homology(SimplicialComplex(3, edges_of({{0, 1, 2}})));
  for (int d = -1; d <= 2; ++d) CHECK(simplex.reduced_betti(d) == 0);
}

TEST_CASE("reduced homology depends on the field for the projective plane") {
  // six-vertex triangulation of RP^2
  SimplicialComplex rp2(6, edges_of({{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                     {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}}));
  auto q = reduced_homology(rp2, Field::rationals());
  auto f2 = reduced_homology(rp2, Field::gf(2));
  auto f3 = reduced_homology(rp2, Field::gf(3));
  for (int d = -1; d <= 2; ++d) CHECK(q.reduced_betti(d) == 0);
  CHECK(f2.reduced_betti(1) == 1);
  CHECK(f2.reduced_betti(2) == 1);
  CHECK(f3.reduced_betti(1) == 0);
}

TEST_CASE("Euler characteristic equals the alternating Betti sum") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<VertexMask> mask(1, 127);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Edge> facets;
    const int k = 1 + trial % 6;
    for (int j = 0; j < k; ++j) facets.push_back(mask_to_edge(mask(rng)));
    SimplicialComplex complex(7, facets);
    auto faces = complex.faces_by_size();
    for (Field f : {Field::rationals(), Field::gf(2), Field::gf(5)}) {
      auto h = reduced_homology(complex, f);
      long long chi = 0, alt = 0;
      for (std::size_t s = 0; s < faces.size(); ++s) {
        const long long sign = s % 2 == 0 ? -1 : 1;  // size s is dimension s - 1
        chi += sign * static_cast<long long>(faces[s].size());
        alt += sign * static_cast<long long>(h.betti[s]);
      }
      CHECK(chi == alt);
    }
  }
}

TEST_CASE("homology matches dense boundary ranks") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<VertexMask> mask(1, 63);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Edge> facets;
    std::vector<VertexMask> masks;
    for (int j = 0; j < 1 + trial % 7; ++j) {
      masks.push_back(mask(rng));
      facets.push_back(mask_to_edge(masks.back()));
    }
    SimplicialComplex complex(6, facets);
    CHECK(reduced_homology(complex, Field::rationals()).betti == dense_betti(masks, 0));
    CHECK(reduced_homology(complex, Field::gf(2)).betti == dense_betti(masks, 2));
  }
}

TEST_CASE("Cohen-Macaulay: examples") {
  CHECK(is_cohen_macaulay(fixtures::single_edge()).cohen_macaulay);
  CHECK(is_cohen_macaulay(fixtures::triangle()).cohen_macaulay);
  // the independence complex of C5 is a connected cycle, so C5 is CM
  CHECK(is_cohen_macaulay(fixtures::cycle(5)).cohen_macaulay);
  CHECK(is_cohen_macaulay(fixtures::path(4)).cohen_macaulay);

  auto c4 = is_cohen_macaulay(fixtures::cycle(4));
  CHECK_FALSE(c4.cohen_macaulay);
  CHECK_FALSE(c4.unmixed_witness);
  REQUIRE(c4.link_failure);
  CHECK(c4.link_failure->face.empty());
  CHECK(c4.link_failure->dimension == 0);
  CHECK(c4.link_failure->betti == 1);

  auto mixed = is_cohen_macaulay(parse("v: x1 x2 x3\ne: x1 x2\ne: x1 x3\n"));
  CHECK_FALSE(mixed.cohen_macaulay);
  REQUIRE(mixed.unmixed_witness);
  CHECK(mixed.unmixed_witness->first == Edge{0});
  CHECK(mixed.unmixed_witness->second == Edge{1, 2});
  auto p5 = is_cohen_macaulay(fixtures::path(5));
  CHECK_FALSE(p5.cohen_macaulay);
  REQUIRE(p5.unmixed_witness);
  CHECK(p5.unmixed_witness->first.size() != p5.unmixed_witness->second.size());
}

TEST_CASE("grafted clutters are Cohen-Macaulay") {
  for (auto c : {fixtures::triangle(), fixtures::cycle(4), fixtures::cycle(5), fixtures::two_triangles(),
                 parse("v: x1 x2 x3 x4\ne: x1 x2 x3\ne: x2 x3 x4\ne: x1 x3 x4\n")}) {
    CHECK(is_cohen_macaulay(graft(c)).cohen_macaulay);
    CHECK(is_cohen_macaulay(graft(c), Field::gf(2)).cohen_macaulay);
  }
}

TEST_CASE("Cohen-Macaulay verdicts agree with the dense Reisner oracle") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    auto c = oracle::random_clutter(rng, 2 + trial % 5, 6);
    CHECK(is_cohen_macaulay(c, Field::rationals()).cohen_macaulay == reisner_oracle(c, 0));
    CHECK(is_cohen_macaulay(c, Field::gf(2)).cohen_macaulay == reisner_oracle(c, 2));
  }
}

TEST_CASE("Cohen-Macaulay implies unmixed") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    auto c = oracle::random_clutter(rng, 2 + trial % 5, 6);
    if (!is_cohen_macaulay(c).cohen_macaulay) continue;
    auto covers = oracle::minimal_covers(c);
    for (const auto& cov : covers) CHECK(cov.size() == covers.front().size());
  }
}

TEST_CASE("Cohen-Macaulay size limit") {
  CHECK_THROWS_AS(is_cohen_macaulay(fixtures::cycle(6), Field::rationals(), 5), InstanceTooLarge);
}
