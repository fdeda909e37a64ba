// clutterlab command-line interface.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "clutterlab/clutter.hpp"
#include "clutterlab/error.hpp"
#include "clutterlab/properties.hpp"
#include "clutterlab/theorems.hpp"

using namespace clutterlab;

namespace {

enum ExitCode : int { kOk = 0, kNegative = 1, kViolation = 2, kUsage = 3, kTooLarge = 4 };

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    if (!bytes.empty() && bytes.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << bytes << '\n';
  if (!out) throw Error("error writing '" + path + "'");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Vertex> vertex_list(const Clutter& c, const std::string& s) {
  std::vector<Vertex> out;
  for (const auto& label : split_list(s)) out.push_back(c.index_of(label));
  return out;
}

struct CorpusFlags {
  std::size_t n = 4;
  std::size_t d = 0;
  std::size_t qmax = 0;
  bool iso = false;
  int max_w = 2;
  int max_power = 2;
  std::size_t threads = 1;
  std::string out;

  void attach(CLI::App* app) {
    app->add_option("--n", n, "number of vertices")->check(CLI::Range(1, 6));
    app->add_option("--d", d, "edge size (0 = any)");
    app->add_option("--qmax", qmax, "maximum number of edges (0 = any)");
    app->add_flag("--iso", iso, "one representative per isomorphism class");
    app->add_option("--max-w", max_w, "weight bound W for max-flow min-cut")->check(CLI::NonNegativeNumber);
    app->add_option("--max-power", max_power, "power bound k")->check(CLI::PositiveNumber);
    app->add_option("--threads", threads, "worker threads (0 = all cores)");
    app->add_option("--out", out, "write the JSON report to this path");
  }

  CorpusSpec spec() const {
    CorpusSpec s;
    s.n = n;
    if (d) s.d = d;
    s.q_max = qmax;
    s.isomorph_reject = iso;
    return s;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clutters, their transformations, and exact checks of their combinatorial and algebraic properties"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "evaluate properties of one clutter");
  std::string props = "konig,packing,ideal,mfmc,normal,ntf,cm";
  int check_w = kDefaultMfmcBound, check_k = kDefaultPowerBound;
  std::string field_name = "q", format_name = "json", check_file, check_out;
  bool strict = false;
  check->add_option("--props", props, "comma-separated: alpha0,beta1,konig,packing (or pp),ideal,mfmc,normal,normal_bounded,ntf,cm or all");
  check->add_option("--max-w", check_w, "weight bound W for max-flow min-cut")->check(CLI::NonNegativeNumber);
  check->add_option("--max-power", check_k, "power bound k")->check(CLI::PositiveNumber);
  check->add_option("--field", field_name, "coefficient field for cm: q or f2");
  check->add_option("--format", format_name, "json, csv or text");
  check->add_option("--out", check_out, "output path (default stdout)");
  check->add_flag("--strict", strict, "exit 1 if any property is negative");
  check->add_option("file", check_file, "clutter file, - for stdin")->required();

  // transform
  auto* transform = app.add_subcommand("transform", "apply a transformation and print the resulting clutter");
  std::string op, t_file, t_delete, t_contract, t_vertex, t_weights;
  std::size_t t_length = 1;
  transform->add_option("op", op, "minor, duplicate, parallelize, graft or whisker")
      ->required()
      ->check(CLI::IsMember({"minor", "duplicate", "parallelize", "graft", "whisker"}));
  transform->add_option("file", t_file, "clutter file, - for stdin")->required();
  transform->add_option("--delete", t_delete, "minor: vertices to delete (comma-separated)");
  transform->add_option("--contract", t_contract, "minor: vertices to contract (comma-separated)");
  transform->add_option("--vertex", t_vertex, "duplicate / whisker: the vertex");
  transform->add_option("--weights", t_weights, "parallelize: comma-separated w");
  transform->add_option("--length", t_length, "whisker: number of new vertices")->check(CLI::PositiveNumber);

  // scan
  auto* scan = app.add_subcommand("scan", "packing => max-flow min-cut scan over a corpus");
  CorpusFlags scan_flags;
  scan_flags.max_w = kDefaultMfmcBound;
  scan_flags.max_power = kDefaultPowerBound;
  scan_flags.attach(scan);

  // verify
  auto* verify = app.add_subcommand("verify", "check every theorem implication over a corpus");
  CorpusFlags verify_flags;
  int parallel_weight = 2;
  bool no_parallel = false, no_whiskers = false, no_graft = false, no_cm = false;
  verify_flags.attach(verify);
  verify->add_option("--parallel-w", parallel_weight, "parallelizations use w in {0..this}^n")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--no-parallel", no_parallel, "skip the parallelization stage");
  verify->add_flag("--no-whiskers", no_whiskers, "skip the whisker stage");
  verify->add_flag("--no-graft", no_graft, "skip the graft stage");
  verify->add_flag("--no-cm", no_cm, "skip Cohen-Macaulay checks on corpus clutters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) {
      CheckOptions options;
      options.props = parse_property_list(props);
      options.max_weight = check_w;
      options.max_power = check_k;
      options.field = parse_field(field_name);
      const auto format = parse_report_format(format_name);
      const Clutter c = parse_clutter(read_input(check_file));
      const auto report = check_clutter(c, options);
      write_output(check_out, emit_report({report}, format));
      if (strict) {
        for (const auto& p : report.properties) {
          if (p.negative()) return kNegative;
        }
      }
      return kOk;
    }
    if (*transform) {
      const Clutter c = parse_clutter(read_input(t_file));
      Clutter result;
      if (op == "minor") {
        result = minor(c, vertex_list(c, t_delete), vertex_list(c, t_contract));
      } else if (op == "duplicate") {
        result = duplicate(c, c.index_of(t_vertex));
      } else if (op == "parallelize") {
        std::vector<int> w;
        for (const auto& s : split_list(t_weights)) w.push_back(std::stoi(s));
        if (w.size() != c.num_vertices()) throw Error("--weights needs one entry per vertex");
        result = parallelization(c, ExponentVector(w));
      } else if (op == "graft") {
        result = graft(c);
      } else {
        result = adjoin_whisker_edge(c, c.index_of(t_vertex), t_length);
      }
      std::cout << serialize_clutter(result);
      if (!result.dropped_vertices().empty()) {
        std::cerr << "dropped vertices:";
        for (const auto& v : result.dropped_vertices()) std::cerr << ' ' << v;
        std::cerr << '\n';
      }
      return kOk;
    }
    if (*scan) {
      ScanOptions options;
      options.max_weight = scan_flags.max_w;
      options.max_power = scan_flags.max_power;
      options.threads = scan_flags.threads;
      const auto result = scan_conforti_cornuejols(scan_flags.spec(), options);
      if (!scan_flags.out.empty()) write_output(scan_flags.out, result.to_json().dump(2));
      std::cout << "scanned " << result.scanned << ", packing " << result.packing << ", candidates "
                << result.candidates.size() << ", hash " << result.hash() << '\n';
      for (const auto& cand : result.candidates) {
        std::cout << "CANDIDATE " << cand.clutter << (cand.exact_refutation ? " (exact refutation)" : " (bounded)")
                  << '\n';
      }
      return kOk;
    }
    if (*verify) {
      VerifyBounds bounds;
      bounds.max_weight = verify_flags.max_w;
      bounds.max_power = verify_flags.max_power;
      bounds.parallel_weight = parallel_weight;
      bounds.parallel_stage = !no_parallel;
      bounds.whisker_stage = !no_whiskers;
      bounds.graft_stage = !no_graft;
      bounds.cohen_macaulay = !no_cm;
      bounds.threads = verify_flags.threads;
      const auto result = verify_theorems(verify_flags.spec(), bounds);
      if (!verify_flags.out.empty()) {
        Json doc = reports_document(result.reports);
        doc["verification"] = result.summary_json();
        write_output(verify_flags.out, doc.dump(2));
      }
      std::cout << result.summary_text() << "hash " << report_hash(result.reports) << '\n';
      return result.ok() ? kOk : kViolation;
    }
  } catch (const InstanceTooLarge& e) {
    std::cerr << "instance too large: " << e.what() << '\n';
    return kTooLarge;
  } catch (const ImplicationViolation& e) {
    std::cerr << "implication violated: " << e.what() << '\n';
    return kViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
