#include "clutterlab/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "clutterlab/error.hpp"

namespace clutterlab {

namespace {

enum Imp : std::size_t {
  kLehman,
  kMfmcKonig,
  kMfmcPacking,
  kNtfNormal,
  kNormalIdealNtf,
  kNtfIdeal,
  kMfmcNtf,
  kCmUnmixed,
  kCmFields,
  kAlphaW,
  kBetaW,
  kBetaWEquality,
  kMfmcIffCw,
  kMfmcParallKonig,
  kParallNormal,
  kParallNtf,
  kWhiskerKonig,
  kWhiskerPacking,
  kWhiskerNormal,
  kGraftCm,
  kGraftPacking,
  kGraftMfmc,
  kImpCount
};

enum class Stage { base, parallel, whisker, graft };

struct ImpInfo {
  const char* name;
  bool hard;
  bool derived;
  Stage stage;
};

// Names follow the statement being checked.
constexpr ImpInfo kImps[kImpCount] = {
    {"packing=>ideal", true, false, Stage::base},
    {"mfmc=>konig", true, false, Stage::base},
    {"mfmc=>packing", false, false, Stage::base},
    {"ntf=>normal", true, false, Stage::base},
    {"normal+ideal=>ntf", true, false, Stage::base},
    {"ntf=>ideal", false, false, Stage::base},
    {"mfmc<=>ntf", false, false, Stage::base},
    {"cm=>unmixed", true, false, Stage::base},
    {"cm-q=cm-f2", false, false, Stage::base},
    {"alpha0(Cw)=cover-weight", true, false, Stage::parallel},
    {"beta1(Cw)<=packing-ilp", true, false, Stage::parallel},
    {"beta1(Cw)=packing-ilp", true, true, Stage::parallel},
    {"mfmc<=>konig(Cw)", true, false, Stage::parallel},
    {"mfmc=>konig(Cw)", true, false, Stage::parallel},
    {"normal=>normal(Cw)", true, false, Stage::parallel},
    {"ntf=>ntf(Cw)", true, false, Stage::parallel},
    {"konig+konig(C-v)=>konig(whisker)", true, false, Stage::whisker},
    {"packing=>packing(whisker)", true, false, Stage::whisker},
    {"normal=>normal(whisker)", true, false, Stage::whisker},
    {"uniform=>cm(graft)", true, false, Stage::graft},
    {"packing=>packing(graft)", true, false, Stage::graft},
    {"mfmc=>mfmc(graft)", true, false, Stage::graft},
};

enum class Outcome { held, failed, skipped };

struct Event {
  std::size_t imp;
  Outcome outcome;
  Json bundle;
};

struct Recorder {
  const Clutter& c;
  std::vector<Event> events;

  void check(std::size_t imp, bool holds, Json detail = nullptr) {
    if (holds) {
      events.push_back({imp, Outcome::held, nullptr});
      return;
    }
    Json bundle;
    bundle["clutter"] = edge_list_string(c);
    bundle["detail"] = std::move(detail);
    events.push_back({imp, Outcome::failed, std::move(bundle)});
  }
  void skip(std::size_t imp) { events.push_back({imp, Outcome::skipped, nullptr}); }
};

struct ClutterOutcome {
  PropertyReport report;
  std::vector<Event> events;
};

template <class F>
void parallel_for(std::size_t count, std::size_t threads, F&& f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

template <class F>
auto timed(PropertyReport& report, const std::string& name, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  report.timings_ms.emplace_back(name, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  return result;
}

bool covers_equal_size(const Clutter& c) {
  const auto covers = minimal_vertex_covers(c).covers;
  return std::all_of(covers.begin(), covers.end(), [&](const Edge& e) { return e.size() == covers.front().size(); });
}

ClutterOutcome evaluate(const Clutter& c, const VerifyBounds& b) {
  ClutterOutcome out;
  Recorder rec{c, {}};
  auto& report = out.report;
  report.clutter = serialize_clutter(c);
  report.dropped_vertices = c.dropped_vertices();
  const auto& lim = b.limits;

  auto konig = timed(report, "konig", [&] { return konig_verdict(c); });
  auto pp = timed(report, "packing", [&] { return has_packing_property(c, lim.packing_vertex_limit); });
  auto ideal = timed(report, "ideal", [&] { return is_ideal_clutter(c, lim.q_vertex_limit); });
  auto mfmc = timed(report, "mfmc", [&] { return mfmc_bounded(c, b.max_weight); });
  std::optional<NormalityVerdict> normal;
  if (b.exact_normal) {
    try {
      normal = timed(report, "normal", [&] { return is_normal(c, lim.hilbert); });
    } catch (const InstanceTooLarge&) {
    }
  }
  auto normal_b = timed(report, "normal_bounded", [&] { return is_normal_bounded(c, b.max_power); });
  auto ntf = timed(report, "ntf", [&] { return is_ntf_bounded(c, b.max_power); });

  report.properties.push_back(konig);
  report.properties.push_back(packing_verdict(c, pp));
  report.properties.push_back(ideal_verdict(c, ideal));
  report.properties.push_back(mfmc_verdict(c, mfmc));
  if (normal) report.properties.push_back(normal_verdict(c, *normal));
  report.properties.push_back(power_verdict(c, "normal_bounded", normal_b));
  report.properties.push_back(power_verdict(c, "ntf", ntf));

  if (pp.holds) rec.check(kLehman, ideal.ideal, report.find("ideal")->witness);
  if (mfmc.certified()) {
    rec.check(kMfmcKonig, !konig.negative(), konig.witness);
    rec.check(kMfmcPacking, pp.holds, report.find("packing")->witness);
  }
  {
    // Within the box only these two directions are forced: integral closure
    // sits inside the symbolic power, and the two coincide when Q(A) is
    // integral. The remaining comparisons can differ by a bound artifact.
    Json d;
    d["ntf"] = ntf.certified();
    d["normal_bounded"] = normal_b.certified();
    d["ideal"] = ideal.ideal;
    d["mfmc"] = mfmc.certified();
    if (ntf.certified()) {
      rec.check(kNtfNormal, normal_b.certified(), d);
      rec.check(kNtfIdeal, ideal.ideal, d);
    }
    if (normal_b.certified() && ideal.ideal) rec.check(kNormalIdealNtf, ntf.certified(), d);
    rec.check(kMfmcNtf, mfmc.certified() == ntf.certified(), d);
  }
  if (b.cohen_macaulay) {
    try {
      auto cm_q = timed(report, "cm", [&] { return is_cohen_macaulay(c, Field::rationals(), lim.cm_vertex_limit); });
      auto cm_2 = timed(report, "cm_f2", [&] { return is_cohen_macaulay(c, Field::gf(2), lim.cm_vertex_limit); });
      report.properties.push_back(cm_verdict(c, cm_q));
      auto v2 = cm_verdict(c, cm_2);
      v2.prop = "cm_f2";
      report.properties.push_back(v2);
      if (cm_q.cohen_macaulay) rec.check(kCmUnmixed, covers_equal_size(c));
      if (cm_2.cohen_macaulay) rec.check(kCmUnmixed, covers_equal_size(c));
      rec.check(kCmFields, cm_q.cohen_macaulay == cm_2.cohen_macaulay);
    } catch (const InstanceTooLarge&) {
      rec.skip(kCmUnmixed);
    }
  }

  if (b.parallel_stage) {
    const auto start = std::chrono::steady_clock::now();
    bool box_ok = true, all_konig = true;
    Json first_mismatch;
    for_each_box_point(c.num_vertices(), b.parallel_weight, [&](const ExponentVector& w) {
      const Clutter cw = parallelization(c, w);
      const long long tau = weighted_cover_number(c, w);
      const long long nu = solve_packing_ilp(c, w).value;
      const auto a0 = static_cast<long long>(covering_number(cw));
      const auto b1 = static_cast<long long>(matching_number(cw));
      Json d;
      d["w"] = w.entries();
      d["alpha0"] = a0;
      d["beta1"] = b1;
      d["cover"] = tau;
      d["packing"] = nu;
      rec.check(kAlphaW, a0 == tau, d);
      rec.check(kBetaW, b1 <= nu, d);
      rec.check(kBetaWEquality, b1 == nu, d);
      if (tau != nu) box_ok = false;
      if (a0 != b1) {
        if (all_konig) first_mismatch = d;
        all_konig = false;
      }
      if (b.parallel_normal && normal && normal->normal) {
        try {
          auto nv = is_normal(cw, b.parallel_hilbert);
          Json nd;
          nd["w"] = w.entries();
          if (nv.witness) nd["witness"] = *nv.witness;
          rec.check(kParallNormal, nv.normal, nd);
        } catch (const InstanceTooLarge&) {
          rec.skip(kParallNormal);
        }
      }
      if (b.parallel_ntf && ntf.certified()) {
        auto r = is_ntf_bounded(cw, b.max_power);
        Json nd;
        nd["w"] = w.entries();
        if (r.counterexample) {
          nd["a"] = r.counterexample->a.entries();
          nd["power"] = r.counterexample->power;
        }
        rec.check(kParallNtf, r.certified(), nd);
      }
      return true;
    });
    rec.check(kMfmcIffCw, box_ok == all_konig, first_mismatch);
    if (mfmc.certified()) rec.check(kMfmcParallKonig, all_konig, first_mismatch);
    report.timings_ms.emplace_back(
        "parallelizations", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }

  if (b.whisker_stage) {
    const auto start = std::chrono::steady_clock::now();
    for (Vertex v = 0; v < c.num_vertices(); ++v) {
      const std::vector<Vertex> del{v};
      const bool konig_minus = has_konig(minor(c, del, {}));
      for (std::size_t len : b.whisker_lengths) {
        const Clutter j = adjoin_whisker_edge(c, v, len);
        Json d;
        d["vertex"] = c.label(v);
        d["length"] = len;
        if (!konig.negative() && konig_minus) rec.check(kWhiskerKonig, has_konig(j), d);
        if (pp.holds) {
          try {
            auto pj = has_packing_property(j, lim.packing_vertex_limit);
            rec.check(kWhiskerPacking, pj.holds, d);
          } catch (const InstanceTooLarge&) {
            rec.skip(kWhiskerPacking);
          }
        }
        if (normal && normal->normal) {
          try {
            auto nj = is_normal(j, b.parallel_hilbert);
            rec.check(kWhiskerNormal, nj.normal, d);
          } catch (const InstanceTooLarge&) {
            rec.skip(kWhiskerNormal);
          }
        }
      }
    }
    report.timings_ms.emplace_back(
        "whiskers", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }

  if (b.graft_stage && is_uniform(c)) {
    const auto start = std::chrono::steady_clock::now();
    const Clutter g = graft(c);
    try {
      auto cm = is_cohen_macaulay(g, Field::rationals(), b.graft_vertex_limit);
      Json d = cm_verdict(g, cm).witness;
      rec.check(kGraftCm, cm.cohen_macaulay, d);
    } catch (const InstanceTooLarge&) {
      rec.skip(kGraftCm);
    }
    if (pp.holds) {
      try {
        auto pg = has_packing_property(g, b.graft_vertex_limit);
        rec.check(kGraftPacking, pg.holds, pg.holds ? Json() : packing_verdict(g, pg).witness);
      } catch (const InstanceTooLarge&) {
        rec.skip(kGraftPacking);
      }
    }
    if (mfmc.certified()) {
      try {
        auto mg = mfmc_bounded(g, b.max_weight);
        rec.check(kGraftMfmc, mg.certified(), mfmc_verdict(g, mg).witness);
      } catch (const InstanceTooLarge&) {
        rec.skip(kGraftMfmc);
      }
    }
    report.timings_ms.emplace_back(
        "graft", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }

  out.events = std::move(rec.events);
  return out;
}

bool stage_enabled(Stage s, const VerifyBounds& b) {
  switch (s) {
    case Stage::base:
      return true;
    case Stage::parallel:
      return b.parallel_stage;
    case Stage::whisker:
      return b.whisker_stage;
    case Stage::graft:
      return b.graft_stage;
  }
  return false;
}

}  // namespace

bool VerificationResult::ok() const {
  return std::none_of(implications.begin(), implications.end(),
                      [](const ImplicationTally& t) { return t.hard && t.failed > 0; });
}

const ImplicationTally* VerificationResult::find(const std::string& name) const {
  for (const auto& t : implications) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

Json VerificationResult::summary_json() const {
  Json j;
  j["clutters"] = clutters;
  j["ok"] = ok();
  Json list = Json::array();
  for (const auto& t : implications) {
    Json e;
    e["name"] = t.name;
    e["hard"] = t.hard;
    if (t.derived) e["derived"] = true;
    e["checked"] = t.checked;
    e["held"] = t.held;
    e["failed"] = t.failed;
    e["skipped"] = t.skipped;
    e["failures"] = t.failures;
    list.push_back(std::move(e));
  }
  j["implications"] = std::move(list);
  return j;
}

std::string VerificationResult::summary_text() const {
  std::string out = "clutters: " + std::to_string(clutters) + "\n";
  for (const auto& t : implications) {
    out += "  " + t.name + ": checked " + std::to_string(t.checked) + ", held " + std::to_string(t.held) +
           ", failed " + std::to_string(t.failed) + ", skipped " + std::to_string(t.skipped);
    if (!t.hard) out += " (soft)";
    if (t.derived) out += " (derived)";
    out += "\n";
    for (std::size_t i = 0; i < t.failures.size() && i < 3; ++i) out += "    " + t.failures[i].dump() + "\n";
  }
  out += ok() ? "result: all implications hold\n" : "result: IMPLICATION VIOLATED\n";
  return out;
}

VerificationResult verify_theorems(const std::vector<Clutter>& corpus, const VerifyBounds& bounds) {
  std::vector<ClutterOutcome> outcomes(corpus.size());
  parallel_for(corpus.size(), bounds.threads, [&](std::size_t i) { outcomes[i] = evaluate(corpus[i], bounds); });

  VerificationResult result;
  result.clutters = corpus.size();
  std::vector<std::size_t> slot(kImpCount, SIZE_MAX);
  for (std::size_t i = 0; i < kImpCount; ++i) {
    if (!stage_enabled(kImps[i].stage, bounds)) continue;
    ImplicationTally t;
    t.name = kImps[i].name;
    t.hard = kImps[i].hard;
    t.derived = kImps[i].derived;
    // Box certification at W only forces Konig on C^w for w inside that box.
    if (i == kMfmcParallKonig) t.hard = bounds.parallel_weight <= bounds.max_weight;
    slot[i] = result.implications.size();
    result.implications.push_back(std::move(t));
  }
  for (auto& o : outcomes) {
    for (auto& e : o.events) {
      if (slot[e.imp] == SIZE_MAX) continue;
      auto& t = result.implications[slot[e.imp]];
      switch (e.outcome) {
        case Outcome::held:
          ++t.checked;
          ++t.held;
          break;
        case Outcome::failed:
          ++t.checked;
          ++t.failed;
          if (t.failures.size() < 20) t.failures.push_back(std::move(e.bundle));
          break;
        case Outcome::skipped:
          ++t.skipped;
          break;
      }
    }
    result.reports.push_back(std::move(o.report));
  }
  return result;
}

VerificationResult verify_theorems(const CorpusSpec& spec, const VerifyBounds& bounds) {
  return verify_theorems(enumerate_clutters(spec), bounds);
}

Json ScanResult::to_json(bool with_timings) const {
  Json doc = reports_document(reports, with_timings);
  Json scan;
  scan["scanned"] = scanned;
  scan["packing"] = packing;
  scan["W"] = max_weight;
  scan["k"] = max_power;
  Json list = Json::array();
  for (const auto& cand : candidates) {
    Json e;
    e["clutter"] = cand.clutter;
    e["initial"] = cand.initial;
    e["escalated"] = cand.escalated;
    e["exact_refutation"] = cand.exact_refutation;
    list.push_back(std::move(e));
  }
  scan["candidates"] = std::move(list);
  scan["note"] =
      "a candidate with a max-flow min-cut counterexample w is an exact refutation; NTF or normality failures "
      "alone are bounded evidence to be escalated";
  doc["scan"] = std::move(scan);
  return doc;
}

std::string ScanResult::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(to_json(false).dump())));
  return buf;
}

ScanResult scan_conforti_cornuejols(const CorpusSpec& spec, const ScanOptions& options) {
  const auto corpus = enumerate_clutters(spec);
  struct Item {
    bool packing = false;
    PropertyReport report;
    std::optional<ScanCandidate> candidate;
  };
  std::vector<Item> items(corpus.size());
  parallel_for(corpus.size(), options.threads, [&](std::size_t i) {
    const Clutter& c = corpus[i];
    Item& item = items[i];
    auto pp = has_packing_property(c, options.packing_vertex_limit);
    if (!pp.holds) return;
    item.packing = true;
    auto& report = item.report;
    report.clutter = serialize_clutter(c);
    report.dropped_vertices = c.dropped_vertices();
    report.properties.push_back(packing_verdict(c, pp));
    auto mfmc = timed(report, "mfmc", [&] { return mfmc_bounded(c, options.max_weight); });
    auto normal = timed(report, "normal", [&] { return is_normal(c, options.hilbert); });
    auto ntf = timed(report, "ntf", [&] { return is_ntf_bounded(c, options.max_power); });
    report.properties.push_back(mfmc_verdict(c, mfmc));
    report.properties.push_back(normal_verdict(c, normal));
    report.properties.push_back(power_verdict(c, "ntf", ntf));
    if (mfmc.certified() && ntf.certified()) return;

    ScanCandidate cand;
    cand.clutter = edge_list_string(c);
    cand.initial["mfmc"] = report_to_json(report, false)["properties"][1];
    cand.initial["ntf"] = report_to_json(report, false)["properties"][3];
    auto mfmc2 = mfmc_bounded(c, options.max_weight + 2);
    auto ntf2 = is_ntf_bounded(c, options.max_power + 2);
    auto mv = mfmc_verdict(c, mfmc2);
    auto nv = power_verdict(c, "ntf", ntf2);
    auto hv = normal_verdict(c, normal);
    cand.escalated["mfmc"] = Json{{"value", mv.value}, {"witness", mv.witness}, {"bound", mv.bound}};
    cand.escalated["ntf"] = Json{{"value", nv.value}, {"witness", nv.witness}, {"bound", nv.bound}};
    cand.escalated["normal"] = Json{{"value", hv.value}, {"witness", hv.witness}};
    cand.exact_refutation = !mfmc.certified() || !mfmc2.certified();
    item.candidate = std::move(cand);
  });

  ScanResult result;
  result.scanned = corpus.size();
  result.max_weight = options.max_weight;
  result.max_power = options.max_power;
  for (auto& item : items) {
    if (!item.packing) continue;
    ++result.packing;
    result.reports.push_back(std::move(item.report));
    if (item.candidate) result.candidates.push_back(std::move(*item.candidate));
  }
  return result;
}

}  // namespace clutterlab
