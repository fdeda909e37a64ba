#pragma once

// Machine verification of the structural theorems on enumerated corpora and
// the packing => max-flow min-cut conjecture scan.

#include <cstddef>
#include <string>
#include <vector>

#include "clutterlab/corpus.hpp"
#include "clutterlab/properties.hpp"
#include "clutterlab/report.hpp"

namespace clutterlab {

struct VerifyBounds {
  int max_weight = 2;       // W for bounded max-flow min-cut
  int max_power = 2;        // k for bounded normality / NTF
  int parallel_weight = 2;  // parallelizations use w in {0..parallel_weight}^n

  bool parallel_stage = true;
  /// Exact normality of every parallelization of a normal clutter.
  bool parallel_normal = true;
  /// Bounded NTF of every parallelization of a bounded-NTF clutter.
  bool parallel_ntf = true;
  bool whisker_stage = true;
  std::vector<std::size_t> whisker_lengths{1, 2};
  bool graft_stage = true;
  /// Exact normality of the corpus clutter itself.
  bool exact_normal = true;
  bool cohen_macaulay = true;

  std::size_t graft_vertex_limit = 16;
  HilbertBasisLimits parallel_hilbert{8, 40};
  CheckOptions limits{};
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 1;
};

struct ImplicationTally {
  std::string name;
  /// A soft check compares bounded certificates whose agreement the theorem
  /// does not force; its failures are counted but not violations.
  bool hard = true;
  bool derived = false;
  std::size_t checked = 0;
  std::size_t held = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;  // instance too large for this check
  std::vector<Json> failures;
};

struct VerificationResult {
  std::vector<PropertyReport> reports;
  std::vector<ImplicationTally> implications;
  std::size_t clutters = 0;

  /// True iff no hard implication failed.
  bool ok() const;
  const ImplicationTally* find(const std::string& name) const;
  Json summary_json() const;
  std::string summary_text() const;
};

VerificationResult verify_theorems(const CorpusSpec& spec, const VerifyBounds& bounds);
VerificationResult verify_theorems(const std::vector<Clutter>& corpus, const VerifyBounds& bounds);

struct ScanOptions {
  int max_weight = kDefaultMfmcBound;
  int max_power = kDefaultPowerBound;
  HilbertBasisLimits hilbert{};
  std::size_t packing_vertex_limit = kDefaultPackingVertexLimit;
  std::size_t threads = 1;
};

struct ScanCandidate {
  std::string clutter;
  Json initial;    // failing bounded verdicts
  Json escalated;  // re-run at W+2, k+2 plus exact normality
  /// A concrete w with cover value != packing value refutes max-flow min-cut
  /// outright; NTF or normality failures alone do not.
  bool exact_refutation = false;
};

struct ScanResult {
  std::size_t scanned = 0;
  std::size_t packing = 0;
  int max_weight = 0;
  int max_power = 0;
  std::vector<PropertyReport> reports;  // one per clutter with the packing property
  std::vector<ScanCandidate> candidates;

  Json to_json(bool with_timings = true) const;
  std::string hash() const;
};

ScanResult scan_conforti_cornuejols(const CorpusSpec& spec, const ScanOptions& options);

}  // namespace clutterlab
