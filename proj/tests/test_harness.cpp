#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <numeric>

#include "clutterlab/corpus.hpp"
#include "clutterlab/error.hpp"
#include "clutterlab/properties.hpp"
#include "clutterlab/report.hpp"
#include "clutterlab/theorems.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace clutterlab;

namespace {

std::size_t count(const CorpusSpec& spec) {
  std::size_t k = 0;
  for_each_clutter(spec, [&](const Clutter&) {
    ++k;
    return true;
  });
  return k;
}

// Isomorphism classes by brute force: canonical key = smallest sorted mask
// list over all relabelings.
std::size_t iso_classes(std::size_t n, std::optional<std::size_t> d) {
  std::vector<std::uint64_t> sets;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    if (!d || static_cast<std::size_t>(std::popcount(m)) == *d) sets.push_back(m);
  }
  std::set<std::vector<std::uint64_t>> classes;
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << sets.size()); ++fam) {
    std::vector<std::uint64_t> edges;
    for (std::size_t a = 0; a < sets.size(); ++a) {
      if (fam >> a & 1) edges.push_back(sets[a]);
    }
    bool antichain = true;
    for (auto x : edges) {
      for (auto y : edges) antichain = antichain && (x == y || (x & y) != x);
    }
    if (!antichain) continue;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> best;
    do {
      std::vector<std::uint64_t> img;
      for (auto e : edges) {
        std::uint64_t m = 0;
        for (std::size_t v = 0; v < n; ++v) {
          if (e >> v & 1) m |= std::uint64_t{1} << perm[v];
        }
        img.push_back(m);
      }
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = img;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

const PropertyReport* report_for(const std::vector<PropertyReport>& reports, const Clutter& c) {
  const auto text = serialize_clutter(c);
  for (const auto& r : reports) {
    if (r.clutter == text) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("corpus: closed-form counts") {
  CHECK(count({2, 2, 0, false}) == 1);
  CHECK(count({3, 2, 0, false}) == 7);
  CHECK(count({3, 2, 0, true}) == 3);
  CHECK(enumerate_clutters({2, 2, 0, false}).front() == fixtures::single_edge());
}

TEST_CASE("corpus: brute-force generator agreement") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(count({n, std::nullopt, 0, false}) == oracle::antichain_count(n));
    for (std::size_t d = 1; d <= n; ++d) CHECK(count({n, d, 0, false}) == oracle::antichain_count(n, d));
  }
  CHECK(count({4, std::nullopt, 0, false}) == 166);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(count({n, std::nullopt, 0, true}) == iso_classes(n, std::nullopt));
    CHECK(count({n, 2, 0, true}) == iso_classes(n, 2));
  }
}

TEST_CASE("corpus: edge cap, canonical order and validity") {
  auto all = enumerate_clutters({4, 2, 2, false});
  CHECK(all.size() == 6 + 15);
  for (const auto& c : all) {
    CHECK(c.num_edges() <= 2);
    CHECK(is_antichain(c.edges()));
  }
  CHECK_THROWS_AS(enumerate_clutters({7, 2, 0, false}), InstanceTooLarge);
}

TEST_CASE("corpus: canonical form is permutation invariant") {
  std::vector<VertexMask> a{0b0011, 0b0110}, b{0b1100, 0b1001};
  CHECK(canonical_form(a, 4) == canonical_form(b, 4));
  CHECK(default_labels(3) == std::vector<std::string>{"x1", "x2", "x3"});
}

TEST_CASE("property names") {
  CHECK(parse_property("pp") == Property::packing);
  CHECK(parse_property("cm") == Property::cm);
  CHECK(parse_property_list("ideal,mfmc") == std::vector<Property>{Property::ideal, Property::mfmc});
  CHECK(parse_property_list("all") == all_properties());
  CHECK_THROWS_AS(parse_property("bogus"), Error);
}

TEST_CASE("report: empty document") {
  CHECK(emit_report({}, ReportFormat::json) == R"({"version":1,"reports":[]})");
}

TEST_CASE("report: triangle json and csv") {
  auto r = check_clutter(fixtures::triangle());
  auto json = emit_report({r}, ReportFormat::json);
  CHECK(json.find(R"("konig":false)") != std::string::npos);
  CHECK(json.find(R"("alpha0":2,"beta1":1)") != std::string::npos);
  CHECK(json.find(R"("fractional_vertex":["1/2","1/2","1/2"])") != std::string::npos);

  auto csv = emit_report({r}, ReportFormat::csv);
  const auto rows = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
  CHECK(rows == 1 + r.properties.size());
  CHECK(csv.rfind("clutter,prop,value,witness,bound\n", 0) == 0);

  auto text = emit_report({r}, ReportFormat::text);
  CHECK(text.find("konig: no") != std::string::npos);
}

TEST_CASE("report: every negative verdict has a witness and bounded ones carry their bound") {
  for (auto c : {fixtures::triangle(), fixtures::cycle(4), fixtures::two_triangles(), fixtures::single_edge()}) {
    auto r = check_clutter(c);
    for (const auto& p : r.properties) {
      if (p.negative()) CHECK_FALSE(p.witness.is_null());
      if (p.prop == "mfmc" || p.prop == "ntf" || p.prop == "cm") CHECK_FALSE(p.bound.is_null());
    }
  }
}

TEST_CASE("report: round trip and schema checks") {
  std::vector<PropertyReport> reports{check_clutter(fixtures::triangle()), check_clutter(fixtures::cycle(4))};
  auto text = reports_document(reports).dump();
  auto back = parse_reports_document(text);
  CHECK(back == reports);
  CHECK(reports_document(back).dump() == text);

  auto doc = Json::parse(text);
  doc["reports"][0]["extra"] = 1;
  CHECK_THROWS_AS(parse_reports_document(doc.dump()), Error);

  doc = Json::parse(text);
  doc["reports"][0]["properties"][0]["note"] = "x";
  CHECK_THROWS_AS(parse_reports_document(doc.dump()), Error);

  doc = Json::parse(text);
  doc["surprise"] = true;
  CHECK_THROWS_AS(parse_reports_document(doc.dump()), Error);

  doc = Json::parse(text);
  doc["version"] = 2;
  CHECK_THROWS_AS(parse_reports_document(doc.dump()), Error);

  doc = Json::parse(text);
  doc["reports"][0]["summary"]["konig"] = true;
  CHECK_THROWS_AS(parse_reports_document(doc.dump()), Error);

  CHECK_THROWS_AS(parse_reports_document("{not json"), Error);
}

TEST_CASE("report: hash ignores timings and is deterministic") {
  auto a = check_clutter(fixtures::triangle());
  auto b = check_clutter(fixtures::triangle());
  b.timings_ms.emplace_back("extra", 12345.0);
  CHECK(report_hash({a}) == report_hash({b}));
  CHECK(report_hash({a}) != report_hash({check_clutter(fixtures::cycle(4))}));
  CHECK(fnv1a("") == 14695981039346656037ull);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("check: dropped vertices are reported") {
  auto c = Clutter::minimal_from({"x1", "x2", "x3"}, {{0, 1}});
  auto r = check_clutter(c, CheckOptions{{Property::konig}});
  CHECK(r.dropped_vertices == std::vector<std::string>{"x3"});
  CHECK(r.properties.size() == 1);
}

TEST_CASE("check: numeric invariants") {
  CheckOptions opts;
  opts.props = {Property::alpha0, Property::beta1};
  auto r = check_clutter(fixtures::cycle(5), opts);
  CHECK(r.find("alpha0")->value == 3);
  CHECK(r.find("beta1")->value == 2);
}

TEST_CASE("verify: n = 3, d = 2") {
  VerifyBounds b;
  b.max_weight = 2;
  b.max_power = 2;
  auto v = verify_theorems(CorpusSpec{3, 2, 0, false}, b);
  CHECK(v.ok());
  CHECK(v.clutters == 7);
  auto* t = report_for(v.reports, fixtures::triangle());
  REQUIRE(t);
  CHECK(t->find("konig")->negative());
  CHECK(t->find("packing")->negative());
  CHECK(t->find("ntf")->negative());
  for (const auto& imp : v.implications) {
    if (imp.hard) CHECK_MESSAGE(imp.failed == 0, imp.name);
  }
  REQUIRE(v.find("uniform=>cm(graft)"));
  CHECK(v.find("uniform=>cm(graft)")->held == 7);
  CHECK(v.summary_json()["ok"] == true);
}

TEST_CASE("verify: single edge passes every property") {
  auto v = verify_theorems(CorpusSpec{2, 2, 0, false}, VerifyBounds{});
  CHECK(v.ok());
  REQUIRE(v.reports.size() == 1);
  for (const auto& p : v.reports[0].properties) CHECK_FALSE(p.negative());
}

TEST_CASE("verify: result is independent of the thread count") {
  VerifyBounds b;
  b.graft_stage = false;
  b.threads = 1;
  auto one = verify_theorems(CorpusSpec{3, std::nullopt, 0, false}, b);
  b.threads = 3;
  auto three = verify_theorems(CorpusSpec{3, std::nullopt, 0, false}, b);
  CHECK(report_hash(one.reports) == report_hash(three.reports));
  CHECK(one.summary_json() == three.summary_json());
}

TEST_CASE("scan: examples") {
  auto s = scan_conforti_cornuejols(CorpusSpec{2, 2, 0, false}, ScanOptions{});
  CHECK(s.scanned == 1);
  CHECK(s.packing == 1);
  CHECK(s.candidates.empty());

  auto t = scan_conforti_cornuejols(CorpusSpec{3, 2, 0, false}, ScanOptions{});
  CHECK(t.scanned == 7);
  CHECK(t.candidates.empty());
  CHECK(report_for(t.reports, fixtures::triangle()) == nullptr);
  CHECK(t.hash() == scan_conforti_cornuejols(CorpusSpec{3, 2, 0, false}, ScanOptions{}).hash());
  auto doc = t.to_json(false);
  CHECK(doc["scan"]["candidates"].empty());
  CHECK_NOTHROW(parse_reports_document(doc.dump()));
}
