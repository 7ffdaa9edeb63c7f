#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "irrs/dense.hpp"
#include "irrs/exact.hpp"
#include "irrs/graph.hpp"
#include "irrs/report.hpp"
#include "irrs/rng.hpp"
#include "irrs/version.hpp"
#include "irrs/weighting.hpp"

namespace {

using nlohmann::json;

// Exit codes (total function of the outcome):
//   0  answer produced (exact/verify pass/bounds/gen/batch completed)
//   1  usage, parse, or I/O error
//   2  node budget exhausted before an answer
//   3  dense pipeline phase failure (report still written)
//   4  verification failed (collision or cap violation)
constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kBudgetExhausted = 2;
constexpr int kPhaseFailure = 3;
constexpr int kVerifyFailure = 4;

constexpr const char* kExitCodeHelp =
    "Exit codes: 0 answer produced; 1 usage/parse/I-O error; "
    "2 node budget exhausted; 3 dense phase failure (report still written); "
    "4 verification failure.";

// ---------------------------------------------------------------------------
// Graph sources
// ---------------------------------------------------------------------------

struct SourceSpec {
  std::string path;
  std::string generator;  // complete | petersen | circulant | random
  int n = 0;
  double p = 0.5;
  int delta_min = 0;
  std::vector<int> offsets;
  std::optional<std::uint64_t> gen_seed;

  std::string label() const {
    if (!path.empty()) return path;
    std::ostringstream s;
    s << generator << '(';
    if (generator == "complete") s << n;
    if (generator == "circulant") {
      s << n << ';';
      for (std::size_t i = 0; i < offsets.size(); ++i) s << (i ? "," : "") << offsets[i];
    }
    if (generator == "random")
      s << n << ",p=" << p << ",dmin=" << delta_min << ",seed=" << gen_seed.value_or(0);
    s << ')';
    return s.str();
  }
};

irrs::Graph realize(const SourceSpec& src, std::uint64_t fallback_seed) {
  if (!src.path.empty()) return irrs::parse_edge_list_file(src.path);
  if (src.generator == "complete") return irrs::generate_complete(src.n);
  if (src.generator == "petersen") return irrs::generate_petersen();
  if (src.generator == "circulant") return irrs::generate_circulant(src.n, src.offsets);
  if (src.generator == "random")
    return irrs::generate_min_degree_random(src.n, src.p, src.delta_min,
                                            src.gen_seed.value_or(fallback_seed));
  throw std::runtime_error("unknown generator: " + src.generator +
                           " (expected complete | petersen | circulant | random)");
}

void add_source_flags(CLI::App* cmd, SourceSpec& src) {
  auto* g = cmd->add_option("--graph", src.path, "Edge-list file (exclusive with --generator)");
  auto* gen = cmd->add_option("--generator", src.generator,
                              "complete | petersen | circulant | random");
  g->excludes(gen);
  gen->excludes(g);
  cmd->add_option("--n", src.n, "Vertex count for generators");
  cmd->add_option("--p", src.p, "Edge probability (random generator)");
  cmd->add_option("--delta-min", src.delta_min, "Minimum degree (random generator)");
  cmd->add_option("--offsets", src.offsets, "Circulant offsets")->delimiter(',');
  cmd->add_option("--gen-seed", src.gen_seed, "Generator seed (random generator)");
}

void require_source(const SourceSpec& src) {
  if (src.path.empty() && src.generator.empty())
    throw CLI::ValidationError("exactly one of --graph or --generator is required");
}

// ---------------------------------------------------------------------------
// Dense config from flags / batch rows
// ---------------------------------------------------------------------------

void apply_slack(irrs::EventSlacks& s, const std::string& name, double value) {
  if (name == "all") {
    s = {value, value, value, value, value, value};
  } else if (name == "proxy_gap") {
    s.proxy_gap = value;
  } else if (name == "big_interval") {
    s.big_interval = value;
  } else if (name == "small_interval") {
    s.small_interval = value;
  } else if (name == "big_reserved") {
    s.big_reserved = value;
  } else if (name == "small_reserved") {
    s.small_reserved = value;
  } else if (name == "small_degree") {
    s.small_degree = value;
  } else {
    throw std::runtime_error("unknown event name in --slack: " + name);
  }
}

irrs::EventSlacks parse_slacks(const std::vector<std::string>& kv) {
  irrs::EventSlacks s;
  for (const auto& item : kv) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("--slack expects name=value, got: " + item);
    apply_slack(s, item.substr(0, eq), std::stod(item.substr(eq + 1)));
  }
  return s;
}

struct DenseFlags {
  int K = 3;
  std::uint64_t seed = 1;
  int trials = 64;
  std::optional<double> t;
  std::optional<int> lambda;
  std::optional<double> x_const, y_prob, z_prob;
  std::vector<std::string> slack_kv;
  std::string order = "ascending_id";

  irrs::DenseConfig config() const {
    irrs::DenseConfig cfg;
    cfg.plan.t = t;
    cfg.plan.lambda = lambda;
    cfg.sample.x_const = x_const;
    cfg.sample.y_prob = y_prob;
    cfg.sample.z_prob = z_prob;
    cfg.slacks = parse_slacks(slack_kv);
    cfg.max_trials = trials;
    if (order == "ascending_id") {
      cfg.order = irrs::SmallOrder::ascending_id;
    } else if (order == "descending_id") {
      cfg.order = irrs::SmallOrder::descending_id;
    } else {
      throw std::runtime_error("--order must be ascending_id or descending_id");
    }
    return cfg;
  }
};

void add_dense_flags(CLI::App* cmd, DenseFlags& f) {
  cmd->add_option("--K", f.K, "Target cap K (>= 3)")->capture_default_str();
  cmd->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  cmd->add_option("--trials", f.trials, "Rejection-sampling budget")->capture_default_str();
  cmd->add_option("--override-t", f.t, "Explicit resolution parameter t (> 1)");
  cmd->add_option("--override-lambda", f.lambda, "Explicit modulus lambda (>= 3)");
  cmd->add_option("--x-const", f.x_const, "Force every x mark to this value");
  cmd->add_option("--y-prob", f.y_prob, "Override small-class probability");
  cmd->add_option("--z-prob", f.z_prob, "Override reserved-edge probability");
  cmd->add_option("--slack", f.slack_kv,
                  "Event slack multiplier name=value (name: all, proxy_gap, big_interval, "
                  "small_interval, big_reserved, small_reserved, small_degree); repeatable");
  cmd->add_option("--order", f.order, "Small-class processing order: ascending_id | descending_id")
      ->capture_default_str();
}

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Fixed column order; wall_ms isolated at the end so everything before it can
// be byte-compared across runs.
constexpr const char* kCsvHeader =
    "index,task,source,n,m,K,k_max,seed,outcome,strength,verified,trials,accepted_trial,nodes,"
    "phase,kind,wall_ms";

struct CsvRow {
  std::string index, task, source, n, m, K, k_max, seed, outcome, strength, verified, trials,
      accepted_trial, nodes, phase, kind, wall_ms;

  std::string line() const {
    std::ostringstream s;
    const std::string* f[] = {&index,    &task,  &source,   &n,     &m,
                              &K,        &k_max, &seed,     &outcome, &strength,
                              &verified, &trials, &accepted_trial, &nodes, &phase,
                              &kind,     &wall_ms};
    for (std::size_t i = 0; i < std::size(f); ++i) s << (i ? "," : "") << csv_escape(*f[i]);
    return s.str();
  }
};

std::string fmt_ms(double ms, bool include_timing) {
  if (!include_timing) return "-";
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

// ---------------------------------------------------------------------------
// Tasks shared by single commands and batch rows
// ---------------------------------------------------------------------------

struct TaskOutput {
  json report;  // library report as JSON
  CsvRow row;
  int exit_code = kOk;
  std::string stdout_line;
};

TaskOutput run_exact_task(const irrs::Graph& g, const std::string& source_label, int k_max,
                          std::uint64_t budget, bool include_timing) {
  const auto res = irrs::exact_strength(g, k_max, budget);
  TaskOutput out;
  out.report = json::parse(irrs::exact_result_json(res, include_timing));
  out.row.task = "exact";
  out.row.source = source_label;
  out.row.n = std::to_string(g.n);
  out.row.m = std::to_string(g.m());
  out.row.k_max = std::to_string(k_max <= 0 ? g.n : k_max);
  out.row.outcome = irrs::outcome_name(res.outcome);
  out.row.nodes = std::to_string(res.nodes);
  out.row.wall_ms = fmt_ms(res.elapsed_ms, include_timing);
  switch (res.outcome) {
    case irrs::ExactResult::Outcome::determined:
      out.row.strength = std::to_string(res.strength);
      out.row.verified = res.witness && irrs::is_irregular(g, *res.witness) ? "true" : "false";
      out.stdout_line = "s(G) = " + std::to_string(res.strength);
      break;
    case irrs::ExactResult::Outcome::infinite:
      out.row.strength = "infinite";
      out.stdout_line = "s(G) = infinite";
      break;
    case irrs::ExactResult::Outcome::none_up_to_kmax:
      out.stdout_line = "no weighting up to k = " + std::to_string(res.stopped_at_k);
      break;
    case irrs::ExactResult::Outcome::budget_exhausted:
      out.stdout_line = "node budget exhausted at k = " + std::to_string(res.stopped_at_k);
      out.exit_code = kBudgetExhausted;
      break;
  }
  return out;
}

TaskOutput run_dense_task(const irrs::Graph& g, const std::string& source_label, int K,
                          std::uint64_t seed, const irrs::DenseConfig& cfg, bool include_timing) {
  const auto rep = irrs::run_pipeline(g, K, seed, cfg);
  TaskOutput out;
  out.report = json::parse(irrs::solve_report_json(rep, include_timing));
  out.row.task = "dense";
  out.row.source = source_label;
  out.row.n = std::to_string(g.n);
  out.row.m = std::to_string(g.m());
  out.row.K = std::to_string(K);
  out.row.seed = std::to_string(seed);
  out.row.outcome = irrs::outcome_name(rep.outcome);
  out.row.verified = rep.verified ? "true" : "false";
  out.row.trials = std::to_string(rep.trials.trials);
  out.row.accepted_trial = std::to_string(rep.accepted_trial);
  out.row.wall_ms = fmt_ms(rep.wall_ms, include_timing);
  if (rep.outcome == irrs::SolveReport::Outcome::success) {
    out.stdout_line = "verified irregular weighting, alphabet within {1,2,3," +
                      std::to_string(K) + "}, " + std::to_string(rep.trials.trials) + " trial(s)";
  } else {
    out.row.phase = rep.failure.phase;
    out.row.kind = rep.failure.kind;
    out.stdout_line =
        "phase failure [" + rep.failure.phase + "/" + rep.failure.kind + "]: " +
        rep.failure.detail;
    out.exit_code = kPhaseFailure;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommand drivers
// ---------------------------------------------------------------------------

int cmd_exact(const SourceSpec& src, int k_max, std::uint64_t budget, const std::string& out_path,
              const std::string& weights_out, bool include_timing) {
  require_source(src);
  const auto g = realize(src, 1);
  const auto task = run_exact_task(g, src.label(), k_max, budget, include_timing);
  std::cout << task.stdout_line << '\n';
  if (!out_path.empty()) {
    write_text_file(out_path, task.report.dump(2));
    std::cout << "report: " << out_path << '\n';
  }
  if (!weights_out.empty()) {
    if (task.report.contains("witness") && !task.report["witness"].is_null()) {
      irrs::EdgeWeighting w{task.report["witness"]["weights"].get<std::vector<int>>(),
                            task.report["witness"]["k"].get<int>()};
      irrs::save_weighting_file(w, weights_out);
      std::cout << "witness: " << weights_out << '\n';
    } else {
      std::cout << "witness: none\n";
    }
  }
  return task.exit_code;
}

int cmd_dense(const SourceSpec& src, const DenseFlags& flags, const std::string& out_path,
              const std::string& weights_out, const std::string& format, bool include_timing) {
  require_source(src);
  const auto g = realize(src, flags.seed);
  const auto cfg = flags.config();
  const auto task = run_dense_task(g, src.label(), flags.K, flags.seed, cfg, include_timing);
  std::cout << task.stdout_line << '\n';
  if (!out_path.empty()) {
    if (format == "csv") {
      CsvRow row = task.row;
      row.index = "0";
      write_text_file(out_path, std::string(kCsvHeader) + "\n" + row.line());
    } else {
      write_text_file(out_path, task.report.dump(2));
    }
    std::cout << "report: " << out_path << '\n';
  }
  if (!weights_out.empty() && task.report.contains("weighting") &&
      !task.report["weighting"].is_null()) {
    irrs::EdgeWeighting w{task.report["weighting"]["weights"].get<std::vector<int>>(),
                          task.report["weighting"]["k"].get<int>()};
    irrs::save_weighting_file(w, weights_out);
    std::cout << "weighting: " << weights_out << '\n';
  }
  return task.exit_code;
}

int cmd_verify(const std::string& graph_path, const std::string& weights_path) {
  const auto g = irrs::parse_edge_list_file(graph_path);
  const auto w = irrs::load_weighting_file(weights_path);
  if (static_cast<int>(w.w.size()) != g.m())
    throw std::runtime_error("weighting has " + std::to_string(w.w.size()) + " entries for " +
                             std::to_string(g.m()) + " edges");
  if (auto e = irrs::find_cap_violation(w)) {
    std::cout << "cap violation: edge " << *e << " has weight " << w.w[*e]
              << " outside [1, " << w.k << "]\n";
    return kVerifyFailure;
  }
  if (auto col = irrs::first_collision(g, w)) {
    std::cout << "collision: vertices " << col->a << " and " << col->b << " share the sum "
              << col->sum << '\n';
    return kVerifyFailure;
  }
  std::cout << "irregular: all " << g.n << " weighted degrees distinct\n";
  return kOk;
}

int cmd_bounds(int n, std::optional<int> d, std::optional<int> K, const std::string& format) {
  json j;
  j["n"] = n;
  if (d) {
    j["d"] = *d;
    j["lower_bound_regular"] = irrs::lower_bound_regular(n, *d);
    j["kkp_upper_bound"] = irrs::kkp_upper_bound(n, *d);
  }
  if (K) {
    j["K"] = *K;
    const double threshold = irrs::delta_threshold(*K, n);
    const auto plan = irrs::plan_intervals(n, std::max(1, d.value_or(1)), *K);
    j["delta_threshold"] = threshold;
    j["threshold_vacuous"] = threshold > static_cast<double>(n);
    j["t"] = plan.t;
    j["lambda_formula"] = plan.lambda;
    j["union_bound_diagnostic"] = irrs::union_bound_diagnostic(n, *K, plan);
  }
  if (format == "json") {
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "n                       " << n << '\n';
  if (d) {
    std::cout << "d (= delta)             " << *d << '\n';
    std::cout << "lower_bound_regular     " << j["lower_bound_regular"].get<int>() << '\n';
    std::cout << "kkp_upper_bound         " << j["kkp_upper_bound"].get<int>() << '\n';
  }
  if (K) {
    std::cout << "K                       " << *K << '\n';
    std::cout << std::setprecision(15);
    std::cout << "t (formula)             " << j["t"].get<double>() << '\n';
    std::cout << "lambda (formula)        " << j["lambda_formula"].get<int>() << '\n';
    std::cout << "delta_threshold         " << j["delta_threshold"].get<double>()
              << (j["threshold_vacuous"].get<bool>() ? "   [vacuous: exceeds n]" : "") << '\n';
    std::cout << "union_bound_diagnostic  " << j["union_bound_diagnostic"].get<double>() << '\n';
  }
  return kOk;
}

int cmd_gen(const SourceSpec& src, const std::string& out_path) {
  if (src.generator.empty()) throw CLI::ValidationError("--generator is required");
  const auto g = realize(src, src.gen_seed.value_or(1));
  if (out_path.empty()) {
    irrs::serialize_edge_list(g, std::cout);
  } else {
    irrs::serialize_edge_list_file(g, out_path);
    std::cout << "graph: " << out_path << " (n=" << g.n << ", m=" << g.m() << ")\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// Batch
// ---------------------------------------------------------------------------

SourceSpec source_from_row(const json& row) {
  SourceSpec src;
  src.path = row.value("graph", "");
  src.generator = row.value("generator", "");
  src.n = row.value("n", 0);
  src.p = row.value("p", 0.5);
  src.delta_min = row.value("delta_min", 0);
  if (row.contains("offsets")) src.offsets = row["offsets"].get<std::vector<int>>();
  if (row.contains("gen_seed")) src.gen_seed = row["gen_seed"].get<std::uint64_t>();
  if (src.path.empty() == src.generator.empty())
    throw std::runtime_error("row needs exactly one of \"graph\" or \"generator\"");
  return src;
}

TaskOutput run_batch_row(const json& row, std::size_t index, std::uint64_t batch_seed,
                         bool include_timing) {
  const std::string task = row.value("task", "");
  const std::uint64_t seed = row.contains("seed") ? row["seed"].get<std::uint64_t>()
                                                  : irrs::derive_seed(batch_seed, index);
  const auto src = source_from_row(row);
  const auto g = realize(src, seed);
  if (task == "exact") {
    return run_exact_task(g, src.label(), row.value("k_max", 0),
                          row.value("budget", irrs::kDefaultNodeBudget), include_timing);
  }
  if (task == "dense") {
    irrs::DenseConfig cfg;
    if (row.contains("t")) cfg.plan.t = row["t"].get<double>();
    if (row.contains("lambda")) cfg.plan.lambda = row["lambda"].get<int>();
    if (row.contains("x_const")) cfg.sample.x_const = row["x_const"].get<double>();
    if (row.contains("y_prob")) cfg.sample.y_prob = row["y_prob"].get<double>();
    if (row.contains("z_prob")) cfg.sample.z_prob = row["z_prob"].get<double>();
    if (row.contains("slacks"))
      for (const auto& [name, value] : row["slacks"].items())
        apply_slack(cfg.slacks, name, value.get<double>());
    cfg.max_trials = row.value("trials", 64);
    if (row.value("order", "ascending_id") == std::string("descending_id"))
      cfg.order = irrs::SmallOrder::descending_id;
    return run_dense_task(g, src.label(), row.value("K", 3), seed, cfg, include_timing);
  }
  throw std::runtime_error("row task must be \"exact\" or \"dense\", got: \"" + task + "\"");
}

int cmd_batch(const std::string& spec_path, const std::string& out_prefix, int jobs,
              bool include_timing) {
  std::ifstream in(spec_path);
  if (!in) throw std::runtime_error("cannot open batch spec: " + spec_path);
  json spec = json::parse(in);
  const std::uint64_t batch_seed = spec.value("seed", 1);
  const json rows = spec.value("rows", json::array());

  std::vector<TaskOutput> results(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      try {
        results[i] = run_batch_row(rows[i], i, batch_seed, include_timing);
      } catch (const std::exception& e) {
        results[i].report = {{"error", e.what()}};
        results[i].row.outcome = "error";
        results[i].row.kind = e.what();
        results[i].row.wall_ms = include_timing ? "0.000" : "-";
        results[i].exit_code = kUsageError;
      }
      results[i].row.index = std::to_string(i);
      if (results[i].row.task.empty()) results[i].row.task = rows[i].value("task", "");
      if (results[i].row.seed.empty() && !rows[i].contains("seed"))
        results[i].row.seed = std::to_string(irrs::derive_seed(batch_seed, i));
    }
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(rows.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::size_t successes = 0, errors = 0;
  json out_rows = json::array();
  std::ostringstream csv;
  csv << kCsvHeader << '\n';
  for (std::size_t i = 0; i < results.size(); ++i) {
    json r;
    r["index"] = i;
    r["task"] = results[i].row.task;
    r["source"] = results[i].row.source;
    r["report"] = results[i].report;
    out_rows.push_back(std::move(r));
    csv << results[i].row.line() << '\n';
    if (results[i].exit_code == kOk) ++successes;
    if (results[i].row.outcome == "error") ++errors;
  }
  json report;
  report["version"] = irrs::kVersion;
  report["spec"] = spec;
  report["jobs"] = jobs;
  report["rows"] = std::move(out_rows);
  report["aggregate"] = {
      {"rows", results.size()},
      {"successes", successes},
      {"errors", errors},
      {"success_rate",
       results.empty() ? 1.0 : static_cast<double>(successes) / static_cast<double>(results.size())}};

  write_text_file(out_prefix + ".json", report.dump(2));
  write_text_file(out_prefix + ".csv", csv.str());
  std::cout << "batch: " << results.size() << " row(s), " << successes << " succeeded, " << errors
            << " errored\nreports: " << out_prefix << ".json, " << out_prefix << ".csv\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("irregularity-strength toolkit\n") + kExitCodeHelp};
  app.set_version_flag("--version", irrs::kVersion);
  app.require_subcommand(1);

  bool no_timing = false;
  app.add_flag("--no-timing", no_timing,
               "Replace timing fields with placeholders for byte-reproducible reports");
  app.fallthrough();  // lets --no-timing trail a subcommand's own flags

  // exact
  auto* exact = app.add_subcommand("exact", "Exact irregularity strength by complete search");
  SourceSpec exact_src;
  add_source_flags(exact, exact_src);
  int k_max = 0;
  std::uint64_t budget = irrs::kDefaultNodeBudget;
  std::string exact_out, exact_weights_out;
  exact->add_option("--k-max", k_max, "Largest cap to try (0 = vertex count)");
  exact->add_option("--budget", budget, "Node budget shared across the scan");
  exact->add_option("--out", exact_out, "Write a JSON report here");
  exact->add_option("--weights-out", exact_weights_out, "Write the witness weighting here");

  // dense
  auto* dense = app.add_subcommand("dense", "Randomized three-phase dense-graph weighting");
  SourceSpec dense_src;
  add_source_flags(dense, dense_src);
  DenseFlags dense_flags;
  add_dense_flags(dense, dense_flags);
  std::string dense_out, dense_weights_out, dense_format = "json";
  dense->add_option("--out", dense_out, "Write the report here");
  dense->add_option("--weights-out", dense_weights_out, "Write the final weighting here");
  dense->add_option("--format", dense_format, "json | csv")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "Check a weighting file against a graph");
  std::string verify_graph, verify_weights;
  verify->add_option("--graph", verify_graph, "Edge-list file")->required();
  verify->add_option("--weights", verify_weights, "Weighting file")->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Closed-form bound table");
  int bounds_n = 0;
  std::optional<int> bounds_d;
  std::optional<int> bounds_K;
  std::string bounds_format = "text";
  bounds->add_option("--n", bounds_n, "Vertex count")->required();
  bounds->add_option("--d", bounds_d, "Degree / minimum degree");
  bounds->add_option("--K", bounds_K, "Target cap for threshold diagnostics");
  bounds->add_option("--format", bounds_format, "text | json")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph and write its edge list");
  SourceSpec gen_src;
  add_source_flags(gen, gen_src);
  std::string gen_out;
  gen->add_option("--out", gen_out, "Output path (stdout when omitted)");

  // batch
  auto* batch = app.add_subcommand("batch", "Run a JSON spec of exact/dense rows");
  std::string batch_spec, batch_out = "batch_report";
  int batch_jobs = 1;
  batch->add_option("--spec", batch_spec, "Batch spec JSON file")->required();
  batch->add_option("--out", batch_out, "Output prefix for .json and .csv")
      ->capture_default_str();
  batch->add_option("--jobs", batch_jobs, "Concurrent rows (results identical to serial)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (app.got_subcommand(exact))
      return cmd_exact(exact_src, k_max, budget, exact_out, exact_weights_out, !no_timing);
    if (app.got_subcommand(dense))
      return cmd_dense(dense_src, dense_flags, dense_out, dense_weights_out, dense_format,
                       !no_timing);
    if (app.got_subcommand(verify)) return cmd_verify(verify_graph, verify_weights);
    if (app.got_subcommand(bounds))
      return cmd_bounds(bounds_n, bounds_d, bounds_K, bounds_format);
    if (app.got_subcommand(gen)) return cmd_gen(gen_src, gen_out);
    if (app.got_subcommand(batch))
      return cmd_batch(batch_spec, batch_out, batch_jobs, !no_timing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
